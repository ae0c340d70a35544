// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "core/types.hpp"

namespace apcen {

enum class SynthKind { Sine, AmTone, ToneComplex, Silence, WhiteNoise };

SynthKind parse_synth_kind(const std::string& name);

struct SynthParams {
  double frequency_hz = 440.0;  // carrier / fundamental
  double am_rate_hz = 4.0;      // am_tone only
  double amplitude = 0.5;
};

// Deterministic test-signal generator; a pure function of its arguments.
// Frequencies at or above Nyquist raise AliasRisk.
AudioClip synth_clip(SynthKind kind, const SynthParams& params,
                     double duration_seconds, uint64_t seed);

// Noise-pool source generators: amplitude-modulated white noise with a
// syllabic-rate envelope ("speech-like") and a harmonic tone complex with
// a slow amplitude wobble ("music-like"). Both deterministic per seed.
AudioClip synth_speech_like(double duration_seconds, uint64_t seed);
AudioClip synth_music_like(double duration_seconds, uint64_t seed);

}  // namespace apcen
