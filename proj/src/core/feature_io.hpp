// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "core/types.hpp"

namespace apcen {

// APCN feature container, 28-byte header + float32 payload:
//
//   offset 0   magic       "APCN"
//   offset 4   version     u16 (currently 1)
//   offset 6   n_channels  u16
//   offset 8   n_frames    u32
//   offset 12  frame_rate  f64
//   offset 20  reserved    u64 (zero)
//   offset 28  payload     n_frames * n_channels f32 LE, frame-major
//              (all channels of frame t are contiguous)
//
// Values are stored as float32; the round trip is bit-exact for any
// finite float32 payload including zeros and denormals.
void save_features(const FeatureMap& map, const std::string& path);
void save_features(const EnergyMap& map, const std::string& path);
FeatureMap load_features(const std::string& path);

// One frame per line, channels in order, comma-separated, '.' decimal,
// 9 significant digits, no header row.
void save_features_csv(const FeatureMap& map, const std::string& path);

}  // namespace apcen
