#include "hopfdual/report.hpp"

#include <algorithm>

namespace hopfdual {

void Report::pass(std::string name, std::string detail) {
  checks_.push_back({std::move(name), true, std::move(detail)});
}

void Report::fail(std::string name, std::string witness) {
  checks_.push_back({std::move(name), false, std::move(witness)});
}

void Report::expect(bool ok, std::string name, std::string witness_if_failed) {
  if (ok)
    pass(std::move(name));
  else
    fail(std::move(name), std::move(witness_if_failed));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.witness});
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::failure_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

std::vector<Check> Report::failures() const {
  std::vector<Check> out;
  std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out), [](const Check& c) { return !c.passed; });
  return out;
}

std::string Report::to_text() const {
  std::string out;
  if (!subject_.empty()) out += subject_ + "\n";
  for (const auto& c : checks_) {
    out += c.passed ? "  [pass] " : "  [FAIL] ";
    out += c.name;
    if (!c.witness.empty()) out += " : " + c.witness;
    out += "\n";
  }
  out += passed() ? "verdict: pass\n" : "verdict: fail (" + std::to_string(failure_count()) + " failed)\n";
  return out;
}

}  // namespace hopfdual
