#pragma once

#include <string>
#include <vector>

namespace hopfdual {

/// One checked identity. A failing check names the violated instance.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

/// Ordered list of checks; every failure is kept, not only the first.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  void pass(std::string name, std::string detail = {});
  void fail(std::string name, std::string witness);
  void expect(bool ok, std::string name, std::string witness_if_failed);
  /// Appends the other report's checks, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t failure_count() const;
  const std::string& subject() const noexcept { return subject_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  std::vector<Check> failures() const;

  /// Human-readable listing, one check per line.
  std::string to_text() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

}  // namespace hopfdual
