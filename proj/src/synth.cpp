// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#include "occ/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

#include "json.hpp"
#include "occ/rng.hpp"
#include "occ/wav.hpp"

namespace occ {

namespace {

constexpr double kUnvoicedGain = 0.316;  // unvoiced segments sit ~10 dB below voiced
constexpr double kAspiration = 0.02;     // noise mixed into voiced excitation

enum class Segment { voiced, unvoiced, pause };

/// Two-pole resonator, the classic formant filter.
class Resonator {
 public:
  void set(double freq_hz, double bandwidth_hz, double sample_rate) {
    const double r = std::exp(-std::numbers::pi * bandwidth_hz / sample_rate);
    const double theta = 2.0 * std::numbers::pi * freq_hz / sample_rate;
    a1_ = 2.0 * r * std::cos(theta);
    a2_ = -r * r;
    gain_ = 1.0 - r;
  }

  double step(double x) {
    const double y = gain_ * x + a1_ * y1_ + a2_ * y2_;
    y2_ = y1_;
    y1_ = y;
    return y;
  }

 private:
  double a1_ = 0.0, a2_ = 0.0, gain_ = 1.0;
  double y1_ = 0.0, y2_ = 0.0;
};

}  // namespace

std::size_t Corpus::total_utterances() const {
  std::size_t n = 0;
  for (const auto& s : speakers) n += s.utterances.size();
  return n;
}

const CorpusSpeaker* Corpus::find(const std::string& id) const {
  for (const auto& s : speakers) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

SpeakerProfile generate_profile(const std::string& id, std::uint64_t seed) {
  RandomStream rng(hash64(seed, "profile/" + id));
  SpeakerProfile p;
  p.id = id;
  p.seed = hash64(seed, "speaker-seed/" + id);
  p.pitch_hz = rng.uniform(85.0, 300.0);
  const double f1 = rng.uniform(320.0, 850.0);
  const double f2 = f1 + rng.uniform(350.0, 1400.0);
  const double f3 = f2 + rng.uniform(600.0, 1600.0);
  p.formants[0] = {f1, rng.uniform(50.0, 110.0)};
  p.formants[1] = {f2, rng.uniform(70.0, 150.0)};
  p.formants[2] = {f3, rng.uniform(100.0, 220.0)};
  p.voicing_rate = rng.uniform(0.45, 0.65);
  p.rms_target = 0.1;
  return p;
}

AudioClip synth_utterance(const SpeakerProfile& profile, double duration_s,
                          std::uint64_t utterance_seed, double sample_rate,
                          const SegmentDurations& segments) {
  if (duration_s <= 0.0) {
    raise(ErrorKind::invalid_argument, "utterance duration must be positive");
  }
  if (sample_rate <= 0.0) {
    raise(ErrorKind::invalid_argument, "sample rate must be positive");
  }
  const auto total =
      static_cast<std::size_t>(std::llround(duration_s * sample_rate));
  RandomStream rng(
      hash64(profile.seed, "utt/" + std::to_string(utterance_seed)));

  AudioClip clip;
  clip.sample_rate = sample_rate;
  clip.samples.assign(total, 0.0);
  std::vector<Segment> state(total, Segment::pause);

  std::array<Resonator, 3> tract;
  Resonator hiss;  // broad high resonance shaping unvoiced noise
  hiss.set(profile.formants[2].freq_hz, 600.0, sample_rate);

  const std::size_t ramp = static_cast<std::size_t>(0.005 * sample_rate);
  std::size_t t = 0;
  double phase = 1.0;  // emit a pulse at the first voiced sample
  while (t < total) {
    // next segment type and length
    const double u = rng.uniform();
    Segment seg;
    double mean_ms;
    if (u < profile.voicing_rate) {
      seg = Segment::voiced;
      mean_ms = segments.voiced_ms;
    } else if (u < profile.voicing_rate + 0.5 * (1.0 - profile.voicing_rate)) {
      seg = Segment::unvoiced;
      mean_ms = segments.unvoiced_ms;
    } else {
      seg = Segment::pause;
      mean_ms = segments.pause_ms;
    }
    double len_ms = -mean_ms * std::log(1.0 - rng.uniform());
    len_ms = std::clamp(len_ms, 40.0, 4.0 * mean_ms);
    std::size_t len =
        static_cast<std::size_t>(std::llround(len_ms * sample_rate / 1000.0));
    len = std::min(std::max<std::size_t>(len, 1), total - t);

    if (seg == Segment::voiced) {
      // per-segment pitch drift and formant perturbation give the voice
      // utterance-internal variation
      const double pitch = profile.pitch_hz * rng.uniform(0.92, 1.08);
      for (std::size_t i = 0; i < 3; ++i) {
        tract[i].set(profile.formants[i].freq_hz * rng.uniform(0.93, 1.07),
                     profile.formants[i].bandwidth_hz, sample_rate);
      }
      const double period = sample_rate / pitch;
      for (std::size_t k = 0; k < len; ++k) {
        phase += 1.0;
        double excitation = kAspiration * rng.gaussian();
        if (phase >= period) {
          phase -= period;
          excitation += 1.0;
        }
        double y = excitation;
        for (auto& res : tract) y = res.step(y);
        clip.samples[t + k] = y;
        state[t + k] = Segment::voiced;
      }
    } else if (seg == Segment::unvoiced) {
      for (std::size_t k = 0; k < len; ++k) {
        clip.samples[t + k] = hiss.step(rng.gaussian());
        state[t + k] = Segment::unvoiced;
      }
    }
    // pauses stay zero

    // raised-cosine ramps against clicks at segment edges
    if (seg != Segment::pause) {
      const std::size_t r = std::min(ramp, len / 2);
      for (std::size_t k = 0; k < r; ++k) {
        const double w =
            0.5 - 0.5 * std::cos(std::numbers::pi * static_cast<double>(k) /
                                 static_cast<double>(r));
        clip.samples[t + k] *= w;
        clip.samples[t + len - 1 - k] *= w;
      }
    }
    t += len;
  }

  // Fix the unvoiced level relative to voiced, then normalize the whole
  // utterance to rms_target.
  double v_acc = 0.0, u_acc = 0.0;
  std::size_t v_n = 0, u_n = 0;
  for (std::size_t i = 0; i < total; ++i) {
    if (state[i] == Segment::voiced) {
      v_acc += clip.samples[i] * clip.samples[i];
      ++v_n;
    } else if (state[i] == Segment::unvoiced) {
      u_acc += clip.samples[i] * clip.samples[i];
      ++u_n;
    }
  }
  if (v_n > 0 && u_n > 0 && u_acc > 0.0) {
    const double target = kUnvoicedGain * std::sqrt(v_acc / v_n);
    const double scale = target / std::sqrt(u_acc / u_n);
    for (std::size_t i = 0; i < total; ++i) {
      if (state[i] == Segment::unvoiced) clip.samples[i] *= scale;
    }
  }
  const double level = rms(clip.samples);
  if (level > 0.0) {
    const double scale = profile.rms_target / level;
    for (double& s : clip.samples) s *= scale;
  }
  return clip;
}

Corpus build_corpus(std::size_t n_speakers, std::size_t utterances_per_speaker,
                    double duration_s, std::uint64_t master_seed,
                    double sample_rate, const SegmentDurations& segments) {
  if (n_speakers < 1) {
    raise(ErrorKind::invalid_argument, "corpus needs at least one speaker");
  }
  if (utterances_per_speaker < 2) {
    raise(ErrorKind::invalid_argument,
          "corpus needs at least two utterances per speaker for a train/test "
          "split");
  }
  Corpus corpus;
  corpus.sample_rate = sample_rate;
  corpus.speakers.reserve(n_speakers);
  for (std::size_t s = 0; s < n_speakers; ++s) {
    char id[16];
    std::snprintf(id, sizeof(id), "spk%03zu", s);
    CorpusSpeaker speaker;
    speaker.id = id;
    speaker.profile =
        generate_profile(speaker.id, hash64(master_seed, "speaker/" + std::to_string(s)));
    for (std::size_t u = 0; u < utterances_per_speaker; ++u) {
      speaker.utterances.push_back(
          synth_utterance(*speaker.profile, duration_s, u, sample_rate, segments));
    }
    corpus.speakers.push_back(std::move(speaker));
  }
  return corpus;
}

Corpus ingest_directory(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    raise(ErrorKind::io, dir.string() + " is not a directory");
  }
  std::map<std::string, std::vector<fs::path>> by_speaker;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".wav") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const std::string stem = path.stem().string();
    const auto sep = stem.rfind('_');
    if (sep == std::string::npos || sep == 0) {
      raise(ErrorKind::invalid_argument,
            path.string() + ": expected <speaker_id>_<utt>.wav naming");
    }
    by_speaker[stem.substr(0, sep)].push_back(path);
  }
  if (by_speaker.empty()) {
    raise(ErrorKind::invalid_argument,
          dir.string() + " contains no WAV files to ingest");
  }

  Corpus corpus;
  corpus.sample_rate = 0.0;
  for (auto& [id, paths] : by_speaker) {
    if (paths.size() < 2) {
      raise(ErrorKind::invalid_argument,
            "speaker " + id + " has fewer than two utterances");
    }
    CorpusSpeaker speaker;
    speaker.id = id;
    for (const auto& path : paths) {
      AudioClip clip = read_wav(path);
      if (corpus.sample_rate == 0.0) {
        corpus.sample_rate = clip.sample_rate;
      } else if (clip.sample_rate != corpus.sample_rate) {
        raise(ErrorKind::mismatch,
              path.string() + ": sample rate " +
                  std::to_string(clip.sample_rate) +
                  " differs from the corpus rate " +
                  std::to_string(corpus.sample_rate));
      }
      speaker.utterances.push_back(std::move(clip));
    }
    corpus.speakers.push_back(std::move(speaker));
  }
  return corpus;
}

std::string corpus_manifest_json(const Corpus& corpus,
                                 std::uint64_t master_seed) {
  nlohmann::ordered_json j;
  j["format"] = "occupancy-audio-corpus";
  j["version"] = 1;
  j["sample_rate"] = corpus.sample_rate;
  j["master_seed"] = master_seed;
  auto speakers = nlohmann::ordered_json::array();
  for (const auto& s : corpus.speakers) {
    nlohmann::ordered_json e;
    e["id"] = s.id;
    e["utterances"] = s.utterances.size();
    auto durations = nlohmann::ordered_json::array();
    for (const auto& u : s.utterances) durations.push_back(u.duration());
    e["durations_s"] = durations;
    if (s.profile) {
      e["pitch_hz"] = s.profile->pitch_hz;
      e["voicing_rate"] = s.profile->voicing_rate;
      e["seed"] = s.profile->seed;
    }
    speakers.push_back(e);
  }
  j["speakers"] = speakers;
  return j.dump(2) + "\n";
}

}  // namespace occ
