// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "occ/error.hpp"

namespace occ {

inline constexpr double kDefaultSampleRate = 16000.0;

/// Mono PCM signal, samples nominally in [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  double sample_rate = kDefaultSampleRate;

  double duration() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

enum class WindowKind { rectangular, hamming };

/// Frame geometry for short-time analysis. Durations are in milliseconds;
/// sample counts are resolved against a clip's sample rate.
struct FrameSpec {
  double frame_ms = 50.0;
  double step_ms = 25.0;
  WindowKind window = WindowKind::hamming;

  std::size_t frame_samples(double sample_rate) const;
  std::size_t step_samples(double sample_rate) const;
};

/// Short-time energy values, one per analysis frame.
struct SteSeries {
  std::vector<double> values;
  FrameSpec frame_spec;
  double source_duration = 0.0;  // seconds of audio the series was computed from
};

/// Number of full frames of `frame` samples at stride `step` fitting into
/// `total` samples. Trailing partial frames are discarded.
std::size_t frame_count(std::size_t total, std::size_t frame, std::size_t step);

/// Slices the clip into overlapped frames. A clip shorter than one frame
/// yields an empty sequence; a non-positive frame/step duration is an error.
std::vector<std::vector<double>> frame_signal(const AudioClip& clip,
                                              const FrameSpec& spec);

/// Window weights of length n. Hamming: w(k) = 0.54 - 0.46 cos(2 pi k/(n-1));
/// a length-1 hamming window is defined as {1.0}.
std::vector<double> make_window(WindowKind kind, std::size_t n);

/// E = (1/N) sum_n w(n) |x(n)|^2. The window weights the squared signal.
double short_time_energy(std::span<const double> frame,
                         std::span<const double> window);

/// Frame-by-frame short-time energy of the whole clip.
SteSeries ste_series(const AudioClip& clip, const FrameSpec& spec);

/// Root-mean-square amplitude of the clip (0 for an empty clip).
double rms(std::span<const double> samples);

}  // namespace occ
