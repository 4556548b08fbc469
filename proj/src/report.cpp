#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "musico/check.h"

namespace musico {

int VerificationReport::passed_count() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; }));
}

int VerificationReport::failed_count() const { return static_cast<int>(results.size()) - passed_count(); }

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.statement << "\n";
    for (const auto& [k, v] : r.details) os << "    " << k << ": " << v << "\n";
    for (const auto& c : r.counterexamples) os << "    counterexample: " << c << "\n";
  }
  os << "summary: " << passed_count() << " passed, " << failed_count() << " failed\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  using ojson = nlohmann::ordered_json;
  ojson out;
  ojson arr = ojson::array();
  for (const auto& r : results) {
    ojson j;
    j["name"] = r.name;
    j["statement"] = r.statement;
    j["passed"] = r.passed;
    ojson details = ojson::array();
    for (const auto& [k, v] : r.details) details.push_back({{"key", k}, {"value", v}});
    j["details"] = details;
    j["counterexamples"] = r.counterexamples;
    arr.push_back(j);
  }
  out["results"] = arr;
  out["summary"] = {{"passed", passed_count()}, {"failed", failed_count()}};
  return out.dump(2) + "\n";
}

}  // namespace musico
