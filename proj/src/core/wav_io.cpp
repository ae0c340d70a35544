// SPDX-License-Identifier: Apache-2.0
#include "core/wav_io.hpp"

#include <cmath>
#include <cstring>
#include <vector>

#include "core/binio.hpp"

namespace apcen {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatIeeeFloat = 3;

struct FmtChunk {
  uint16_t audio_format = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits_per_sample = 0;
};

}  // namespace

AudioClip read_wav(const std::string& path) {
  std::ifstream is = open_input(path);

  char tag[4];
  is.read(tag, 4);
  if (!is || std::memcmp(tag, "RIFF", 4) != 0)
    raise(ErrorKind::Format, "CorruptHeader", path + ": missing RIFF tag");
  (void)read_le<uint32_t>(is);  // riff size, unreliable in the wild
  is.read(tag, 4);
  if (!is || std::memcmp(tag, "WAVE", 4) != 0)
    raise(ErrorKind::Format, "CorruptHeader", path + ": missing WAVE tag");

  FmtChunk fmt;
  bool have_fmt = false;
  std::vector<char> data;
  bool have_data = false;

  while (is.read(tag, 4)) {
    uint32_t chunk_size = read_le<uint32_t>(is);
    if (!is) raise(ErrorKind::Format, "CorruptHeader", path + ": truncated chunk");
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16)
        raise(ErrorKind::Format, "CorruptHeader", path + ": fmt chunk too small");
      fmt.audio_format = read_le<uint16_t>(is);
      fmt.channels = read_le<uint16_t>(is);
      fmt.sample_rate = read_le<uint32_t>(is);
      (void)read_le<uint32_t>(is);  // byte rate
      (void)read_le<uint16_t>(is);  // block align
      fmt.bits_per_sample = read_le<uint16_t>(is);
      is.ignore(chunk_size - 16);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      data.resize(chunk_size);
      is.read(data.data(), chunk_size);
      if (static_cast<uint32_t>(is.gcount()) != chunk_size)
        raise(ErrorKind::Format, "CorruptHeader", path + ": truncated data chunk");
      have_data = true;
      break;
    } else {
      // Skip unknown chunks (LIST, fact, ...). Chunks are word-aligned.
      is.ignore(chunk_size + (chunk_size & 1));
    }
  }
  if (!have_fmt || !have_data)
    raise(ErrorKind::Format, "CorruptHeader",
          path + ": missing fmt or data chunk");

  if (fmt.channels != 1)
    raise(ErrorKind::Unsupported, "UnsupportedFormat",
          path + ": channels " + std::to_string(fmt.channels) +
              " (mono required)");
  if (fmt.sample_rate != kPipelineSampleRate)
    raise(ErrorKind::Unsupported, "UnsupportedFormat",
          path + ": sample_rate " + std::to_string(fmt.sample_rate) +
              " (16000 required)");
  const bool pcm16 = fmt.audio_format == kFormatPcm && fmt.bits_per_sample == 16;
  const bool f32 =
      fmt.audio_format == kFormatIeeeFloat && fmt.bits_per_sample == 32;
  if (!pcm16 && !f32)
    raise(ErrorKind::Unsupported, "UnsupportedFormat",
          path + ": audio_format " + std::to_string(fmt.audio_format) + "/" +
              std::to_string(fmt.bits_per_sample) +
              " bits (PCM16 or float32 required)");

  AudioClip clip;
  clip.sample_rate = static_cast<int>(fmt.sample_rate);
  if (pcm16) {
    const size_t n = data.size() / 2;
    clip.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      int16_t v;
      std::memcpy(&v, data.data() + 2 * i, 2);
      clip.samples[i] = static_cast<double>(v) / 32768.0;
    }
  } else {
    const size_t n = data.size() / 4;
    clip.samples.resize(n);
    for (size_t i = 0; i < n; ++i) {
      float v;
      std::memcpy(&v, data.data() + 4 * i, 4);
      if (!std::isfinite(v))
        raise(ErrorKind::Numeric, "NonFiniteInput",
              path + ": non-finite float sample");
      clip.samples[i] = static_cast<double>(v);
    }
    clip.clamp_all();
  }
  return clip;
}

WavWriteStats write_wav(const AudioClip& clip, const std::string& path) {
  clip.check_finite("write_wav");
  WavWriteStats stats;

  std::vector<int16_t> pcm(clip.samples.size());
  for (size_t i = 0; i < clip.samples.size(); ++i) {
    double s = clip.samples[i];
    if (s > 1.0) {
      s = 1.0;
      ++stats.clipped;
    } else if (s < -1.0) {
      s = -1.0;
      ++stats.clipped;
    }
    long q = std::lround(s * 32768.0);
    if (q > 32767) q = 32767;
    if (q < -32768) q = -32768;
    pcm[i] = static_cast<int16_t>(q);
  }

  const uint32_t data_bytes = static_cast<uint32_t>(pcm.size() * 2);
  std::ofstream os = open_output(path);
  os.write("RIFF", 4);
  write_le<uint32_t>(os, 36 + data_bytes);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  write_le<uint32_t>(os, 16);
  write_le<uint16_t>(os, kFormatPcm);
  write_le<uint16_t>(os, 1);
  write_le<uint32_t>(os, static_cast<uint32_t>(clip.sample_rate));
  write_le<uint32_t>(os, static_cast<uint32_t>(clip.sample_rate * 2));
  write_le<uint16_t>(os, 2);
  write_le<uint16_t>(os, 16);
  os.write("data", 4);
  write_le<uint32_t>(os, data_bytes);
  if (!pcm.empty())
    os.write(reinterpret_cast<const char*>(pcm.data()), data_bytes);
  if (!os) raise(ErrorKind::Io, "IoFailure", "write failed: " + path);
  return stats;
}

}  // namespace apcen
