// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "occ/audio.hpp"

namespace occ {

/// One formant resonance of the synthetic vocal tract.
struct Formant {
  double freq_hz = 0.0;
  double bandwidth_hz = 0.0;
};

/// Parameters of one synthetic voice. Drawn once per speaker and reused for
/// all of that speaker's utterances.
struct SpeakerProfile {
  std::string id;
  double pitch_hz = 120.0;              // fundamental, drawn from [85, 300]
  std::array<Formant, 3> formants{};    // strictly increasing center frequencies
  double voicing_rate = 0.6;            // probability a new segment is voiced
  double rms_target = 0.1;              // long-run RMS of every utterance
  std::uint64_t seed = 0;
};

/// Mean segment durations of the voiced / unvoiced / pause Markov chain.
struct SegmentDurations {
  double voiced_ms = 200.0;
  double unvoiced_ms = 100.0;
  double pause_ms = 150.0;
};

struct CorpusSpeaker {
  std::string id;
  std::optional<SpeakerProfile> profile;  // absent for ingested recordings
  std::vector<AudioClip> utterances;
};

/// Utterances grouped by speaker, all at one sample rate, ordered by id.
struct Corpus {
  double sample_rate = kDefaultSampleRate;
  std::vector<CorpusSpeaker> speakers;

  std::size_t total_utterances() const;
  const CorpusSpeaker* find(const std::string& id) const;
};

/// Deterministic profile draw for (id, seed). Distinct ids give distinct
/// pitch/formant combinations almost surely.
SpeakerProfile generate_profile(const std::string& id, std::uint64_t seed);

/// Synthesizes one utterance: voiced segments are an impulse train at the
/// speaker's pitch through three formant resonators, unvoiced segments are
/// filtered noise, pauses are silence. Segment lengths follow the seeded
/// Markov chain; the whole clip is normalized to the profile's rms_target.
AudioClip synth_utterance(const SpeakerProfile& profile, double duration_s,
                          std::uint64_t utterance_seed,
                          double sample_rate = kDefaultSampleRate,
                          const SegmentDurations& segments = {});

/// Fully deterministic synthetic corpus. Speaker seeds derive from
/// master_seed via hash64(master_seed, "speaker/<index>").
Corpus build_corpus(std::size_t n_speakers, std::size_t utterances_per_speaker,
                    double duration_s, std::uint64_t master_seed,
                    double sample_rate = kDefaultSampleRate,
                    const SegmentDurations& segments = {});

/// Loads WAV files named <speaker_id>_<utt>.wav from a directory.
/// Rejects mixed sample rates and speakers with fewer than two utterances.
Corpus ingest_directory(const std::filesystem::path& dir);

/// JSON manifest describing a corpus (speakers, durations, sample rate,
/// seeds). Written next to the WAV files by the synth command.
std::string corpus_manifest_json(const Corpus& corpus,
                                 std::uint64_t master_seed);

}  // namespace occ
