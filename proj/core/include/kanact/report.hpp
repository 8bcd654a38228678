#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kanact {

enum class Outcome { pass, fail, hypothesis_failed };

std::string to_string(Outcome outcome);

/// Tally of an exhaustive sweep. Only the first few violation messages are
/// kept; violation_count counts all of them.
struct CheckReport {
  std::string name;
  std::size_t checks = 0;
  std::size_t violation_count = 0;
  std::vector<std::string> violations;

  static constexpr std::size_t kKeptMessages = 20;

  template <class Message>
  void expect(bool condition, Message&& message) {
    ++checks;
    if (condition) return;
    ++violation_count;
    if (violations.size() < kKeptMessages) violations.push_back(message());
  }
  void merge(const CheckReport& other);
  bool ok() const { return violation_count == 0; }
};

}  // namespace kanact
