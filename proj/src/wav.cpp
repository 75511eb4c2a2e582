// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#include "occ/wav.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace occ {

namespace {

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 |
         static_cast<std::uint32_t>(p[3]) << 24;
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | p[1] << 8);
}

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

AudioClip read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorKind::io, "cannot open " + path.string());
  }
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();

  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 ||
      std::memcmp(data + 8, "WAVE", 4) != 0) {
    raise(ErrorKind::malformed_file,
          path.string() + ": not a RIFF/WAVE file or truncated header");
  }

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* pcm = nullptr;
  std::size_t pcm_bytes = 0;

  std::size_t off = 12;
  while (off + 8 <= size) {
    const char* id = bytes.data() + off;
    const std::uint32_t chunk_size = read_u32(data + off + 4);
    const std::size_t body = off + 8;
    if (body + chunk_size > size) {
      raise(ErrorKind::malformed_file,
            path.string() + ": chunk extends past end of file");
    }
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (chunk_size < 16) {
        raise(ErrorKind::malformed_file, path.string() + ": fmt chunk too short");
      }
      format = read_u16(data + body);
      channels = read_u16(data + body + 2);
      rate = read_u32(data + body + 4);
      bits = read_u16(data + body + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      pcm = data + body;
      pcm_bytes = chunk_size;
    }
    off = body + chunk_size + (chunk_size & 1);  // chunks are word aligned
  }

  if (!have_fmt || pcm == nullptr) {
    raise(ErrorKind::malformed_file,
          path.string() + ": missing fmt or data chunk");
  }
  if (format != 1) {
    raise(ErrorKind::unsupported_format,
          path.string() + ": only PCM encoding is supported (format tag " +
              std::to_string(format) + ")");
  }
  if (channels != 1) {
    raise(ErrorKind::unsupported_format,
          path.string() + ": only mono input is supported, file has " +
              std::to_string(channels) + " channels");
  }
  if (bits != 16) {
    raise(ErrorKind::unsupported_format,
          path.string() + ": only 16-bit samples are supported, file has " +
              std::to_string(bits) + " bits");
  }
  if (rate == 0) {
    raise(ErrorKind::malformed_file, path.string() + ": zero sample rate");
  }

  AudioClip clip;
  clip.sample_rate = static_cast<double>(rate);
  clip.samples.resize(pcm_bytes / 2);
  for (std::size_t i = 0; i < clip.samples.size(); ++i) {
    const auto v = static_cast<std::int16_t>(read_u16(pcm + 2 * i));
    clip.samples[i] = static_cast<double>(v) / 32768.0;
  }
  return clip;
}

WavWriteStats write_wav(const std::filesystem::path& path,
                        const AudioClip& clip) {
  if (clip.sample_rate <= 0.0) {
    raise(ErrorKind::invalid_argument, "sample rate must be positive");
  }
  WavWriteStats stats;
  const std::uint32_t rate =
      static_cast<std::uint32_t>(std::llround(clip.sample_rate));
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(clip.samples.size() * 2);

  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  put_u32(out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, rate);
  put_u32(out, rate * 2);  // byte rate
  put_u16(out, 2);         // block align
  put_u16(out, 16);        // bits per sample
  out += "data";
  put_u32(out, data_bytes);

  for (double s : clip.samples) {
    double clamped = s;
    if (!(s >= -1.0 && s <= 1.0)) {
      clamped = std::clamp(std::isnan(s) ? 0.0 : s, -1.0, 1.0);
      ++stats.clamped;
    }
    const auto v = static_cast<std::int16_t>(std::lround(clamped * 32767.0));
    put_u16(out, static_cast<std::uint16_t>(v));
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    raise(ErrorKind::io, "cannot open " + path.string() + " for writing");
  }
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) {
    raise(ErrorKind::io, "short write to " + path.string());
  }
  return stats;
}

}  // namespace occ
