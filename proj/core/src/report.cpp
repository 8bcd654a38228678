#include "kanact/report.hpp"

namespace kanact {

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::hypothesis_failed: return "hypothesis_failed";
  }
  return "unknown";
}

void CheckReport::merge(const CheckReport& other) {
  checks += other.checks;
  violation_count += other.violation_count;
  for (const auto& v : other.violations) {
    if (violations.size() < kKeptMessages) violations.push_back(v);
  }
}

}  // namespace kanact
