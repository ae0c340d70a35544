// SPDX-License-Identifier: Apache-2.0
#include "core/feature_io.hpp"

#include <cstdio>
#include <cstring>
#include <limits>

#include "core/binio.hpp"

namespace apcen {

namespace {

constexpr uint16_t kVersion = 1;

void save_matrix(const Eigen::MatrixXd& values, double frame_rate,
                 const std::string& path) {
  const Eigen::Index frames = values.rows();
  const Eigen::Index channels = values.cols();
  if (channels > std::numeric_limits<uint16_t>::max() ||
      frames > static_cast<Eigen::Index>(std::numeric_limits<uint32_t>::max()))
    raise(ErrorKind::InvalidArgument, "DimensionOverflow",
          "map dimensions exceed header field widths");

  std::ofstream os = open_output(path);
  os.write("APCN", 4);
  write_le<uint16_t>(os, kVersion);
  write_le<uint16_t>(os, static_cast<uint16_t>(channels));
  write_le<uint32_t>(os, static_cast<uint32_t>(frames));
  write_le<double>(os, frame_rate);
  write_le<uint64_t>(os, 0);
  for (Eigen::Index t = 0; t < frames; ++t)
    for (Eigen::Index i = 0; i < channels; ++i)
      write_le<float>(os, static_cast<float>(values(t, i)));
  if (!os) raise(ErrorKind::Io, "IoFailure", "write failed: " + path);
}

}  // namespace

void save_features(const FeatureMap& map, const std::string& path) {
  save_matrix(map.values, map.frame_rate, path);
}

void save_features(const EnergyMap& map, const std::string& path) {
  save_matrix(map.values, map.frame_rate, path);
}

FeatureMap load_features(const std::string& path) {
  std::ifstream is = open_input(path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "APCN", 4) != 0)
    raise(ErrorKind::Format, "BadMagic", path + ": not an APCN feature file");
  const uint16_t version = read_le<uint16_t>(is);
  if (version != kVersion)
    raise(ErrorKind::Format, "BadMagic",
          path + ": unsupported version " + std::to_string(version));
  const uint16_t channels = read_le<uint16_t>(is);
  const uint32_t frames = read_le<uint32_t>(is);
  FeatureMap map;
  map.frame_rate = read_le<double>(is);
  (void)read_le<uint64_t>(is);
  if (!is)
    raise(ErrorKind::Format, "BadMagic", path + ": truncated header");

  map.values.resize(frames, channels);
  for (uint32_t t = 0; t < frames; ++t)
    for (uint16_t i = 0; i < channels; ++i)
      map.values(t, i) = static_cast<double>(read_le<float>(is));
  if (!is)
    raise(ErrorKind::Format, "BadMagic", path + ": truncated payload");
  return map;
}

void save_features_csv(const FeatureMap& map, const std::string& path) {
  std::ofstream os = open_output(path);
  char buf[64];
  for (Eigen::Index t = 0; t < map.frames(); ++t) {
    for (Eigen::Index i = 0; i < map.channels(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.9g", map.values(t, i));
      if (i) os << ',';
      os << buf;
    }
    os << '\n';
  }
  if (!os) raise(ErrorKind::Io, "IoFailure", "write failed: " + path);
}

}  // namespace apcen
