// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#include "occ/audio.hpp"

#include <cmath>
#include <numbers>

namespace occ {

namespace {

std::size_t duration_to_samples(double ms, double sample_rate,
                                const char* what) {
  if (ms <= 0.0) {
    raise(ErrorKind::invalid_argument,
          std::string(what) + " must be positive, got " + std::to_string(ms) +
              " ms");
  }
  if (sample_rate <= 0.0) {
    raise(ErrorKind::invalid_argument, "sample rate must be positive");
  }
  const auto n = static_cast<std::size_t>(std::llround(ms * sample_rate / 1000.0));
  if (n == 0) {
    raise(ErrorKind::invalid_argument,
          std::string(what) + " is shorter than one sample");
  }
  return n;
}

}  // namespace

std::size_t FrameSpec::frame_samples(double sample_rate) const {
  return duration_to_samples(frame_ms, sample_rate, "frame length");
}

std::size_t FrameSpec::step_samples(double sample_rate) const {
  return duration_to_samples(step_ms, sample_rate, "step length");
}

std::size_t frame_count(std::size_t total, std::size_t frame,
                        std::size_t step) {
  if (total < frame) return 0;
  return (total - frame) / step + 1;
}

std::vector<std::vector<double>> frame_signal(const AudioClip& clip,
                                              const FrameSpec& spec) {
  const std::size_t frame = spec.frame_samples(clip.sample_rate);
  const std::size_t step = spec.step_samples(clip.sample_rate);
  if (step > frame) {
    raise(ErrorKind::invalid_argument,
          "step length exceeds frame length (" + std::to_string(spec.step_ms) +
              " > " + std::to_string(spec.frame_ms) + " ms)");
  }
  const std::size_t count = frame_count(clip.samples.size(), frame, step);
  std::vector<std::vector<double>> frames;
  frames.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto begin = clip.samples.begin() + static_cast<std::ptrdiff_t>(i * step);
    frames.emplace_back(begin, begin + static_cast<std::ptrdiff_t>(frame));
  }
  return frames;
}

std::vector<double> make_window(WindowKind kind, std::size_t n) {
  if (n == 0) {
    raise(ErrorKind::invalid_argument, "window length must be at least 1");
  }
  std::vector<double> w(n, 1.0);
  if (kind == WindowKind::hamming && n >= 2) {
    for (std::size_t k = 0; k < n; ++k) {
      w[k] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi *
                                    static_cast<double>(k) /
                                    static_cast<double>(n - 1));
    }
  }
  return w;
}

double short_time_energy(std::span<const double> frame,
                         std::span<const double> window) {
  if (frame.size() != window.size() || frame.empty()) {
    raise(ErrorKind::invalid_argument,
          "frame and window must have equal nonzero length");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    acc += window[i] * frame[i] * frame[i];
  }
  return acc / static_cast<double>(frame.size());
}

SteSeries ste_series(const AudioClip& clip, const FrameSpec& spec) {
  const std::size_t frame = spec.frame_samples(clip.sample_rate);
  const std::size_t step = spec.step_samples(clip.sample_rate);
  if (step > frame) {
    raise(ErrorKind::invalid_argument, "step length exceeds frame length");
  }
  const std::vector<double> window = make_window(spec.window, frame);
  const std::size_t count = frame_count(clip.samples.size(), frame, step);

  SteSeries series;
  series.frame_spec = spec;
  series.source_duration = clip.duration();
  series.values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::span<const double> slice(clip.samples.data() + i * step, frame);
    series.values.push_back(short_time_energy(slice, window));
  }
  return series;
}

double rms(std::span<const double> samples) {
  if (samples.empty()) return 0.0;
  double acc = 0.0;
  for (double s : samples) acc += s * s;
  return std::sqrt(acc / static_cast<double>(samples.size()));
}

}  // namespace occ
