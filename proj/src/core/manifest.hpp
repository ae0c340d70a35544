// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace apcen {

enum class Split { Train, Val, Test };

const char* split_name(Split s);
Split parse_split(const std::string& s);

struct ManifestRow {
  std::string path;
  int label = 0;
  Split split = Split::Train;
  // Optional augmentation condition; empty for plain manifests.
  std::string condition;
};

struct Manifest {
  std::vector<ManifestRow> rows;

  int num_classes() const;
  std::vector<ManifestRow> split_rows(Split s) const;
};

// CSV `path,label,split[,condition]`, no header row. Relative paths are
// resolved against the manifest's directory. Validates that class ids are
// contiguous from 0 and every path exists.
Manifest load_manifest(const std::string& path);
void save_manifest(const Manifest& manifest, const std::string& path);

}  // namespace apcen
