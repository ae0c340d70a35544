// SPDX-License-Identifier: Apache-2.0
#include "core/synth.hpp"

#include <cmath>

#include "core/rng.hpp"

namespace apcen {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kAmDepth = 0.9;

void require_below_nyquist(double f, int sample_rate) {
  if (f >= sample_rate / 2.0)
    raise(ErrorKind::InvalidArgument, "AliasRisk",
          "frequency " + std::to_string(f) + " Hz >= Nyquist " +
              std::to_string(sample_rate / 2) + " Hz");
}

}  // namespace

SynthKind parse_synth_kind(const std::string& name) {
  if (name == "sine") return SynthKind::Sine;
  if (name == "am_tone") return SynthKind::AmTone;
  if (name == "tone_complex") return SynthKind::ToneComplex;
  if (name == "silence") return SynthKind::Silence;
  if (name == "white_noise") return SynthKind::WhiteNoise;
  raise(ErrorKind::InvalidArgument, "ConfigInvalid",
        "unknown synth kind '" + name + "'");
}

AudioClip synth_clip(SynthKind kind, const SynthParams& params,
                     double duration_seconds, uint64_t seed) {
  if (duration_seconds <= 0.0)
    raise(ErrorKind::InvalidArgument, "ConfigInvalid", "duration must be > 0");

  AudioClip clip;
  clip.sample_rate = kPipelineSampleRate;
  const int64_t n =
      static_cast<int64_t>(std::llround(duration_seconds * clip.sample_rate));
  clip.samples.assign(n, 0.0);
  const double sr = clip.sample_rate;
  const double amp = params.amplitude;

  switch (kind) {
    case SynthKind::Silence:
      break;
    case SynthKind::Sine: {
      require_below_nyquist(params.frequency_hz, clip.sample_rate);
      const double w = kTwoPi * params.frequency_hz / sr;
      for (int64_t t = 0; t < n; ++t) clip.samples[t] = amp * std::sin(w * t);
      break;
    }
    case SynthKind::AmTone: {
      require_below_nyquist(params.frequency_hz, clip.sample_rate);
      const double wc = kTwoPi * params.frequency_hz / sr;
      const double wm = kTwoPi * params.am_rate_hz / sr;
      // Peak-normalized so |sample| <= amp.
      const double scale = amp / (1.0 + kAmDepth);
      for (int64_t t = 0; t < n; ++t)
        clip.samples[t] =
            scale * (1.0 + kAmDepth * std::sin(wm * t)) * std::sin(wc * t);
      break;
    }
    case SynthKind::ToneComplex: {
      require_below_nyquist(params.frequency_hz, clip.sample_rate);
      Rng rng = substream(seed, "tone_complex");
      const int harmonics = 5;
      double peak = 0.0;
      std::vector<double> phase(harmonics);
      for (int k = 0; k < harmonics; ++k) phase[k] = rng.uniform(0.0, kTwoPi);
      for (int64_t t = 0; t < n; ++t) {
        double v = 0.0;
        for (int k = 0; k < harmonics; ++k) {
          const double f = params.frequency_hz * (k + 1);
          if (f >= sr / 2.0) break;  // drop harmonics above Nyquist
          v += std::sin(kTwoPi * f / sr * t + phase[k]) / (k + 1);
        }
        clip.samples[t] = v;
        peak = std::max(peak, std::abs(v));
      }
      if (peak > 0.0)
        for (double& s : clip.samples) s *= amp / peak;
      break;
    }
    case SynthKind::WhiteNoise: {
      Rng rng = substream(seed, "white_noise");
      for (int64_t t = 0; t < n; ++t)
        clip.samples[t] = amp * rng.uniform(-1.0, 1.0);
      break;
    }
  }
  clip.clamp_all();
  clip.clipped_count = 0;  // synthesis is in-range by construction
  return clip;
}

AudioClip synth_speech_like(double duration_seconds, uint64_t seed) {
  Rng rng = substream(seed, "speech_like");
  const double env_rate = rng.uniform(2.0, 6.0);
  const double phase = rng.uniform(0.0, kTwoPi);
  AudioClip clip =
      synth_clip(SynthKind::WhiteNoise, {.amplitude = 1.0}, duration_seconds,
                 mix_seed(seed, "speech_like.noise"));
  const double w = kTwoPi * env_rate / clip.sample_rate;
  for (int64_t t = 0; t < clip.size(); ++t) {
    const double env = 0.5 * (1.0 + std::sin(w * t + phase));
    clip.samples[t] *= 0.3 * (0.1 + 0.9 * env);
  }
  return clip;
}

AudioClip synth_music_like(double duration_seconds, uint64_t seed) {
  Rng rng = substream(seed, "music_like");
  const double root = rng.uniform(80.0, 400.0);
  AudioClip a = synth_clip(SynthKind::ToneComplex, {.frequency_hz = root,
                                                    .amplitude = 0.5},
                           duration_seconds, mix_seed(seed, "music.root"));
  AudioClip b = synth_clip(SynthKind::ToneComplex,
                           {.frequency_hz = root * 1.5, .amplitude = 0.35},
                           duration_seconds, mix_seed(seed, "music.fifth"));
  const double wobble_rate = rng.uniform(0.3, 1.0);
  const double w = kTwoPi * wobble_rate / a.sample_rate;
  for (int64_t t = 0; t < a.size(); ++t) {
    const double g = 0.75 + 0.25 * std::sin(w * t);
    a.samples[t] = g * (a.samples[t] + b.samples[t]);
  }
  a.clamp_all();
  a.clipped_count = 0;
  return a;
}

}  // namespace apcen
