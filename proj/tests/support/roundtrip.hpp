#pragma once

// Load every fixture into its domain object, write it back and compare bytes.
// Case files and corrupted inputs go through JSON only.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kanact/io.hpp"

namespace roundtrip {

namespace fs = std::filesystem;
using kanact::Json;

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Result {
  fs::path file;
  bool ok = false;
  std::string detail;
};

inline std::string rewrite(const fs::path& root, const fs::path& file) {
  const auto text = slurp(file);
  const auto j = kanact::parse_json(text, file.string());
  const auto kind = file.parent_path().filename().string();
  const auto stem = file.stem().string();
  const auto dir = file.parent_path();
  auto complex = [&](const std::string& name) {
    return kanact::complex_from_json(kanact::read_json_file(root / "complexes" / (name + ".json")));
  };
  if (kind == "complexes") return kanact::canonical_dump(kanact::complex_to_json(kanact::complex_from_json(j)));
  if (kind == "groups") return kanact::canonical_dump(kanact::group_to_json(kanact::group_from_json(j)));
  if (kind == "quotients") {
    static const std::map<std::string, std::string> base{{"z2_id", "nerve_z2_4"},
                                                         {"z3_id", "nerve_z3_4"},
                                                         {"z2xz2_id", "nerve_z2xz2_4"},
                                                         {"z4_parity", "nerve_z4_4"},
                                                         {"z6_parity", "nerve_z6_4"}};
    const auto k = complex(base.at(stem));
    return kanact::canonical_dump(
        kanact::quotient_to_json(kanact::quotient_from_json(j, k, dir), k, j.at("group")));
  }
  if (kind == "actions") {
    kanact::SSetPresentation x;
    if (stem == "deck_swap_z2") {
      const auto k = complex("nerve_z2_4");
      const auto q = kanact::quotient_from_json(
          kanact::read_json_file(root / "quotients" / "z2_id.json"), k, root / "quotients");
      x = kanact::build_cover(k, q).total;
    } else {
      static const std::map<std::string, std::string> base{{"inversion_z3", "nerve_z3_4"},
                                                           {"trivial_z3", "nerve_z3_4"},
                                                           {"swap_z2xz2", "nerve_z2xz2_4"},
                                                           {"trivial_z2", "nerve_z2_4"}};
      x = complex(base.at(stem));
    }
    return kanact::canonical_dump(
        kanact::action_to_json(kanact::action_from_json(j, x, dir), x, j.at("group")));
  }
  if (kind == "phi") {
    const auto q = kanact::group_from_json(
        kanact::read_json_file(root / "groups" / (stem == "inversion_z3" ? "z3.json" : "z2.json")));
    return kanact::canonical_dump(
        kanact::phi_to_json(kanact::phi_from_json(j, q, dir), q, j.at("group")));
  }
  return kanact::canonical_dump(j);
}

inline std::vector<Result> check_all(const fs::path& root) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Result> out;
  for (const auto& f : files) {
    Result r{f, false, ""};
    try {
      r.ok = rewrite(root, f) == slurp(f);
      if (!r.ok) r.detail = "bytes differ";
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace roundtrip
