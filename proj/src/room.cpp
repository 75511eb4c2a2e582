// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#include "occ/room.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "json.hpp"
#include "occ/rng.hpp"

namespace occ {

double RoomSpec::mic_x() const {
  if (shape == RoomShape::circular) return 0.0;
  return mic == MicPosition::center ? length_m / 2.0 : 0.0;
}

double RoomSpec::mic_y() const {
  if (shape == RoomShape::circular) return 0.0;
  return mic == MicPosition::center ? width_m / 2.0 : 0.0;
}

void RoomSpec::validate() const {
  if (shape == RoomShape::rectangular) {
    if (length_m <= 0.0 || width_m <= 0.0) {
      raise(ErrorKind::invalid_argument, "room dimensions must be positive");
    }
  } else {
    if (radius_m <= 0.0) {
      raise(ErrorKind::invalid_argument, "room radius must be positive");
    }
    if (mic == MicPosition::corner) {
      raise(ErrorKind::invalid_argument,
            "a circular room has no corner; use a center microphone");
    }
  }
  if (r0 <= 0.0 || a0 <= 0.0) {
    raise(ErrorKind::invalid_argument, "r0 and a0 must be positive");
  }
}

double room_area(const RoomSpec& room) {
  room.validate();
  if (room.shape == RoomShape::rectangular) {
    return room.length_m * room.width_m;
  }
  return std::numbers::pi * room.radius_m * room.radius_m;
}

std::size_t density_cap(const RoomSpec& room) {
  return static_cast<std::size_t>(std::floor(room_area(room)));
}

Placement place_speakers(const RoomSpec& room, std::size_t n,
                         std::uint64_t seed) {
  room.validate();
  const std::size_t cap = density_cap(room);
  if (n > cap) {
    raise(ErrorKind::constraint,
          "requested " + std::to_string(n) + " speakers but the density cap "
          "of one speaker per square meter allows at most " +
          std::to_string(cap));
  }
  RandomStream rng(seed);
  const double mic_x = room.mic_x();
  const double mic_y = room.mic_y();

  Placement placement;
  placement.xs.reserve(n);
  placement.ys.reserve(n);
  placement.distances.reserve(n);
  while (placement.size() < n) {
    double x, y;
    if (room.shape == RoomShape::rectangular) {
      x = rng.uniform(0.0, room.length_m);
      y = rng.uniform(0.0, room.width_m);
    } else {
      x = rng.uniform(-room.radius_m, room.radius_m);
      y = rng.uniform(-room.radius_m, room.radius_m);
      if (x * x + y * y > room.radius_m * room.radius_m) continue;
    }
    const double r = std::hypot(x - mic_x, y - mic_y);
    if (r <= room.r0) continue;  // keep clear of the microphone
    placement.xs.push_back(x);
    placement.ys.push_back(y);
    placement.distances.push_back(r);
  }
  return placement;
}

AudioClip attenuate(const AudioClip& clip, double r, const RoomSpec& room) {
  room.validate();
  if (r <= room.r0) {
    raise(ErrorKind::constraint,
          "speaker at " + std::to_string(r) + " m is within the minimum "
          "distance r0 = " + std::to_string(room.r0) + " m");
  }
  const double gain = room.a0 * room.r0 / r;
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples.resize(clip.samples.size());
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    out.samples[i] = gain * clip.samples[i];
  }
  return out;
}

AudioClip mix_room(const std::vector<AudioClip>& utterances,
                   const Placement& placement, const RoomSpec& room,
                   const NoiseSpec& noise) {
  room.validate();
  if (utterances.size() != placement.size()) {
    raise(ErrorKind::mismatch,
          "got " + std::to_string(utterances.size()) + " utterances for " +
              std::to_string(placement.size()) + " speaker positions");
  }
  if (noise.std_dev < 0.0) {
    raise(ErrorKind::invalid_argument, "noise std_dev must be non-negative");
  }

  double sample_rate = kDefaultSampleRate;
  std::size_t len = std::numeric_limits<std::size_t>::max();
  if (utterances.empty()) {
    len = 0;
  } else {
    sample_rate = utterances.front().sample_rate;
    for (const auto& u : utterances) {
      if (u.sample_rate != sample_rate) {
        raise(ErrorKind::mismatch, "utterance sample rates differ");
      }
      len = std::min(len, u.samples.size());
    }
  }

  AudioClip mixed;
  mixed.sample_rate = sample_rate;
  mixed.samples.assign(len, 0.0);
  const double scale = room.a0 * room.r0;
  for (std::size_t i = 0; i < utterances.size(); ++i) {
    const double w = scale / placement.distances[i];
    const auto& src = utterances[i].samples;
    for (std::size_t t = 0; t < len; ++t) {
      mixed.samples[t] += w * src[t];
    }
  }
  if (noise.mean != 0.0 || noise.std_dev > 0.0) {
    RandomStream rng(noise.seed);
    for (std::size_t t = 0; t < len; ++t) {
      mixed.samples[t] += rng.gaussian(noise.mean, noise.std_dev);
    }
  }
  return mixed;
}

std::string placement_json(const Placement& placement) {
  nlohmann::ordered_json j;
  j["count"] = placement.size();
  auto positions = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < placement.size(); ++i) {
    positions.push_back({{"x", placement.xs[i]},
                         {"y", placement.ys[i]},
                         {"distance", placement.distances[i]}});
  }
  j["positions"] = positions;
  return j.dump(2) + "\n";
}

}  // namespace occ
