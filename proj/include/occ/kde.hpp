// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

namespace occ {

/// Gaussian-kernel density estimate sampled on a uniform grid.
struct KdeCurve {
  std::vector<double> grid;     // abscissae, ascending
  std::vector<double> density;  // non-negative, integrates to ~1
  double bandwidth = 0.0;
  std::size_t sample_count = 0;
};

/// Silverman's rule: h = 0.9 * min(std, IQR/1.34) * m^(-1/5).
double silverman_bandwidth(std::span<const double> samples);

/// Fits a Gaussian KDE on a 512-point grid spanning [min-3h, max+3h].
/// Needs at least 10 samples with nonzero spread; a bandwidth override
/// must be positive.
KdeCurve fit_kde(std::span<const double> samples,
                 std::optional<double> bandwidth = std::nullopt);

/// Grid abscissa of the global density maximum; ties resolve to the
/// smallest abscissa.
double map_level(const KdeCurve& curve);

/// Trapezoidal integral of the curve over its grid.
double kde_integral(const KdeCurve& curve);

/// Density at x by linear interpolation, 0 outside the grid.
double kde_density_at(const KdeCurve& curve, double x);

}  // namespace occ
