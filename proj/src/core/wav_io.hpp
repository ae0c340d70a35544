// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "core/types.hpp"

namespace apcen {

// Reads a RIFF/WAVE file. Accepts mono PCM16 or IEEE float32 at 16 kHz
// only; anything else raises UnsupportedFormat naming the offending
// property. PCM16 samples are scaled by 1/32768.
AudioClip read_wav(const std::string& path);

struct WavWriteStats {
  // Samples clamped into [-1, 1] before quantization.
  int64_t clipped = 0;
};

// Writes mono PCM16 at the clip's sample rate. Quantizer: round(s * 32768)
// clamped to [-32768, 32767], so the read-back error is at most one
// quantization step (1/32768) per sample.
WavWriteStats write_wav(const AudioClip& clip, const std::string& path);

}  // namespace apcen
