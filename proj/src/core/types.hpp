// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

#include "core/errors.hpp"

namespace apcen {

constexpr int kPipelineSampleRate = 16000;

// Mono waveform in [-1, 1]. Samples written through clamp() are clipped
// into range and counted.
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = kPipelineSampleRate;
  // Number of samples that had to be clipped into [-1, 1] so far.
  int64_t clipped_count = 0;

  int64_t size() const { return static_cast<int64_t>(samples.size()); }
  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }

  // Clamps every sample into [-1, 1], incrementing clipped_count per hit.
  void clamp_all() {
    for (double& s : samples) {
      if (s > 1.0) {
        s = 1.0;
        ++clipped_count;
      } else if (s < -1.0) {
        s = -1.0;
        ++clipped_count;
      }
    }
  }

  void check_finite(const char* context) const {
    for (double s : samples) {
      if (!std::isfinite(s))
        raise(ErrorKind::Numeric, "NonFiniteInput",
              std::string(context) + ": clip contains non-finite samples");
    }
  }
};

// T frames x N channels of non-negative subband energies.
struct EnergyMap {
  Eigen::MatrixXd values;  // (frames, channels)
  double frame_rate = 100.0;

  Eigen::Index frames() const { return values.rows(); }
  Eigen::Index channels() const { return values.cols(); }
};

// Normalized front-end output, same layout as EnergyMap.
struct FeatureMap {
  Eigen::MatrixXd values;
  double frame_rate = 100.0;

  Eigen::Index frames() const { return values.rows(); }
  Eigen::Index channels() const { return values.cols(); }
};

inline void require_shape_match(const Eigen::MatrixXd& a,
                                const Eigen::MatrixXd& b,
                                const char* context) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    raise(ErrorKind::InvalidArgument, "ShapeMismatch", context);
}

}  // namespace apcen
