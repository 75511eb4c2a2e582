// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace occ {

/// Derives a child seed from a master seed and a stable string key.
///
/// The rule is fixed so that corpora and simulations are reproducible across
/// builds: the key is folded into the seed with FNV-1a (64 bit), then the
/// result is finalized with the splitmix64 mixer. Every random decision in
/// the toolkit flows from one master seed through keys like
/// "corpus/speaker/3/utt/1" or "eval/size/40/trial/17".
std::uint64_t hash64(std::uint64_t seed, std::string_view key);

/// Deterministic random stream with the distributions the toolkit needs.
///
/// Gaussian draws use Box-Muller over the raw 64-bit engine output instead of
/// std::normal_distribution, whose sequence differs between standard library
/// implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

  /// Standard normal draw.
  double gaussian();

  double gaussian(double mean, double std_dev) {
    return mean + std_dev * gaussian();
  }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace occ
