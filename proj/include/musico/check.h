#ifndef MUSICO_CHECK_H
#define MUSICO_CHECK_H

#include <string>
#include <utility>
#include <vector>

namespace musico {

/// @brief Outcome of one verified statement.
struct CheckResult {
  CheckResult() = default;
  CheckResult(std::string n, std::string s) : name(std::move(n)), statement(std::move(s)) {}

  std::string name;
  std::string statement;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> details;
  std::vector<std::string> counterexamples;

  void detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
  void fail(std::string witness) { counterexamples.push_back(std::move(witness)); }
  /// Requires cond, recording witness otherwise.
  void expect(bool cond, const std::string& witness) {
    if (!cond) fail(witness);
  }
  CheckResult& finish() {
    passed = counterexamples.empty();
    return *this;
  }
};

struct VerificationReport {
  std::vector<CheckResult> results;

  int passed_count() const;
  int failed_count() const;
  bool all_passed() const { return failed_count() == 0; }
  const CheckResult* find(const std::string& name) const;

  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace musico

#endif  // MUSICO_CHECK_H
