// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstddef>
#include <filesystem>

#include "occ/audio.hpp"

namespace occ {

struct WavWriteStats {
  std::size_t clamped = 0;  // samples outside [-1, 1] clipped on write
};

/// Reads a RIFF/WAVE file holding 16-bit signed PCM, one channel.
/// float = int16 / 32768. Anything else raises malformed_file or
/// unsupported_format.
AudioClip read_wav(const std::filesystem::path& path);

/// Writes 16-bit PCM mono. int16 = round(clamp(x, -1, 1) * 32767);
/// out-of-range samples are clamped and counted.
WavWriteStats write_wav(const std::filesystem::path& path,
                        const AudioClip& clip);

}  // namespace occ
