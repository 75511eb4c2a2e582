// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "occ/audio.hpp"

namespace occ {

/// Real-to-complex power spectrum of fixed size, backed by FFTW.
/// Input shorter than the transform size is zero padded.
class PowerSpectrum {
 public:
  explicit PowerSpectrum(std::size_t fft_size);
  ~PowerSpectrum();

  PowerSpectrum(const PowerSpectrum&) = delete;
  PowerSpectrum& operator=(const PowerSpectrum&) = delete;

  std::size_t fft_size() const { return n_; }
  std::size_t bins() const { return n_ / 2 + 1; }

  /// |X(k)|^2 for k = 0 .. n/2.
  std::vector<double> compute(std::span<const double> input) const;

 private:
  std::size_t n_;
  struct Plan;
  std::unique_ptr<Plan> plan_;
};

/// Average power spectrum over Hamming-windowed frames of fft_size samples
/// at hop fft_size/2. Used for long-term spectral comparisons.
std::vector<double> long_term_average_spectrum(const AudioClip& clip,
                                               std::size_t fft_size);

}  // namespace occ
