#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqft/matrix.hpp"

namespace tqft {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::optional<EntryDiff> witness;  // first differing entry, row-major
};

/// Ordered list of named exact checks. Overall pass iff every check passes.
class AxiomReport {
 public:
  /// Records `name` as lhs == rhs.
  void expect_equal(std::string name, const Matrix& lhs, const Matrix& rhs);
  void add(CheckResult result) { checks_.push_back(std::move(result)); }
  void append(const AxiomReport& other);

  bool passed() const;
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  const CheckResult* find(const std::string& name) const;
  std::vector<std::string> failed_names() const;

  /// One line per check: "name: pass" or "name: fail at (r,c): lhs != rhs".
  std::string format() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace tqft
