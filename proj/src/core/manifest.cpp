// SPDX-License-Identifier: Apache-2.0
#include "core/manifest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "core/errors.hpp"

namespace fs = std::filesystem;

namespace apcen {

const char* split_name(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::Test: return "test";
  }
  return "?";
}

Split parse_split(const std::string& s) {
  if (s == "train") return Split::Train;
  if (s == "val") return Split::Val;
  if (s == "test") return Split::Test;
  raise(ErrorKind::Format, "BadMagic", "unknown split '" + s + "'");
}

int Manifest::num_classes() const {
  int max_label = -1;
  for (const auto& r : rows) max_label = std::max(max_label, r.label);
  return max_label + 1;
}

std::vector<ManifestRow> Manifest::split_rows(Split s) const {
  std::vector<ManifestRow> out;
  for (const auto& r : rows)
    if (r.split == s) out.push_back(r);
  return out;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream is(path);
  if (!is) raise(ErrorKind::Io, "IoFailure", "cannot open manifest: " + path);
  const fs::path base = fs::path(path).parent_path();

  Manifest m;
  std::string line;
  int lineno = 0;
  std::set<int> labels;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields;
    size_t start = 0;
    for (size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() < 3 || fields.size() > 4)
      raise(ErrorKind::Format, "BadMagic",
            path + ":" + std::to_string(lineno) + ": expected 3 or 4 fields");
    ManifestRow row;
    fs::path p(fields[0]);
    row.path = p.is_absolute() ? p.string() : (base / p).string();
    try {
      row.label = std::stoi(fields[1]);
    } catch (const std::exception&) {
      raise(ErrorKind::Format, "BadMagic",
            path + ":" + std::to_string(lineno) + ": bad label field");
    }
    if (row.label < 0)
      raise(ErrorKind::Format, "BadMagic",
            path + ":" + std::to_string(lineno) + ": negative label");
    row.split = parse_split(fields[2]);
    if (fields.size() == 4) row.condition = fields[3];
    if (!fs::exists(row.path))
      raise(ErrorKind::Io, "IoFailure",
            path + ":" + std::to_string(lineno) +
                ": unresolvable path " + row.path);
    labels.insert(row.label);
    m.rows.push_back(std::move(row));
  }
  // Class ids must be contiguous from 0.
  int expect = 0;
  for (int l : labels) {
    if (l != expect)
      raise(ErrorKind::Format, "BadMagic",
            path + ": class ids not contiguous from 0 (missing " +
                std::to_string(expect) + ")");
    ++expect;
  }
  return m;
}

void save_manifest(const Manifest& manifest, const std::string& path) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) raise(ErrorKind::Io, "IoFailure", "cannot write manifest: " + path);
  for (const auto& r : manifest.rows) {
    os << r.path << ',' << r.label << ',' << split_name(r.split);
    if (!r.condition.empty()) os << ',' << r.condition;
    os << '\n';
  }
  if (!os) raise(ErrorKind::Io, "IoFailure", "write failed: " + path);
}

}  // namespace apcen
