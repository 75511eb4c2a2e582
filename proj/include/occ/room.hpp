// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "occ/audio.hpp"

namespace occ {

enum class RoomShape { rectangular, circular };
enum class MicPosition { center, corner };

/// Room geometry plus the decay-law anchors: a0 is the amplitude measured at
/// the reference distance r0, and speakers are never placed closer than r0.
struct RoomSpec {
  RoomShape shape = RoomShape::rectangular;
  double length_m = 10.0;  // rectangular only
  double width_m = 8.0;    // rectangular only
  double radius_m = 5.0;   // circular only
  MicPosition mic = MicPosition::center;
  double r0 = 2.0;
  double a0 = 1.0;

  /// Resolved microphone coordinates.
  double mic_x() const;
  double mic_y() const;

  /// Raises on non-positive dimensions or a corner mic in a circular room.
  void validate() const;
};

struct Placement {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> distances;  // to the microphone, each > r0

  std::size_t size() const { return distances.size(); }
};

/// Additive background noise at the microphone.
struct NoiseSpec {
  double mean = 0.0;
  double std_dev = 0.0;
  std::uint64_t seed = 0;
};

/// Floor area in square meters.
double room_area(const RoomSpec& room);

/// Maximum occupancy at the one-speaker-per-square-meter density cap.
std::size_t density_cap(const RoomSpec& room);

/// Uniform positions over the room minus the r0 disk around the microphone,
/// by rejection sampling. Raises `constraint` if n exceeds the density cap.
Placement place_speakers(const RoomSpec& room, std::size_t n,
                         std::uint64_t seed);

/// Applies the inverse-distance gain (r0/r)*a0 to every sample.
/// Raises `constraint` if r <= r0.
AudioClip attenuate(const AudioClip& clip, double r, const RoomSpec& room);

/// Microphone signal: x(t) = a0*r0*sum_i x_i(t)/r_i + g(t) with g drawn
/// i.i.d. from Normal(noise.mean, noise.std_dev^2). Clips are truncated to
/// the shortest common length.
AudioClip mix_room(const std::vector<AudioClip>& utterances,
                   const Placement& placement, const RoomSpec& room,
                   const NoiseSpec& noise);

/// Placement as JSON (coordinates and distances) for scatter plots.
std::string placement_json(const Placement& placement);

}  // namespace occ
