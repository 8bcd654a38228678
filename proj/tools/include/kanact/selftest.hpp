#pragma once

#include <string>
#include <vector>

namespace kanact {

struct SelftestLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// The invariant suite run by `kanact selftest`.
std::vector<SelftestLine> run_selftest();

}  // namespace kanact
