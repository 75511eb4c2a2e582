// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#include "occ/spectrum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>

#include "occ/error.hpp"

namespace occ {

struct PowerSpectrum::Plan {
  double* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan plan = nullptr;

  ~Plan() {
    if (plan) fftw_destroy_plan(plan);
    if (in) fftw_free(in);
    if (out) fftw_free(out);
  }
};

PowerSpectrum::PowerSpectrum(std::size_t fft_size)
    : n_(fft_size), plan_(std::make_unique<Plan>()) {
  if (fft_size < 2) {
    raise(ErrorKind::invalid_argument, "fft size must be at least 2");
  }
  plan_->in = fftw_alloc_real(n_);
  plan_->out = fftw_alloc_complex(n_ / 2 + 1);
  plan_->plan = fftw_plan_dft_r2c_1d(static_cast<int>(n_), plan_->in,
                                     plan_->out, FFTW_ESTIMATE);
}

PowerSpectrum::~PowerSpectrum() = default;

std::vector<double> PowerSpectrum::compute(std::span<const double> input) const {
  if (input.size() > n_) {
    raise(ErrorKind::invalid_argument, "input longer than fft size");
  }
  std::memset(plan_->in, 0, n_ * sizeof(double));
  std::copy(input.begin(), input.end(), plan_->in);
  fftw_execute(plan_->plan);
  std::vector<double> power(bins());
  for (std::size_t k = 0; k < power.size(); ++k) {
    const double re = plan_->out[k][0];
    const double im = plan_->out[k][1];
    power[k] = re * re + im * im;
  }
  return power;
}

std::vector<double> long_term_average_spectrum(const AudioClip& clip,
                                               std::size_t fft_size) {
  PowerSpectrum fft(fft_size);
  const std::vector<double> window = make_window(WindowKind::hamming, fft_size);
  const std::size_t hop = fft_size / 2;
  const std::size_t count = frame_count(clip.samples.size(), fft_size, hop);
  std::vector<double> acc(fft.bins(), 0.0);
  if (count == 0) return acc;

  std::vector<double> buf(fft_size);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t k = 0; k < fft_size; ++k) {
      buf[k] = clip.samples[i * hop + k] * window[k];
    }
    const std::vector<double> p = fft.compute(buf);
    for (std::size_t k = 0; k < p.size(); ++k) acc[k] += p[k];
  }
  for (double& v : acc) v /= static_cast<double>(count);
  return acc;
}

}  // namespace occ
