#include "tqft/report.hpp"

#include <algorithm>
#include <sstream>

namespace tqft {

void AxiomReport::expect_equal(std::string name, const Matrix& lhs, const Matrix& rhs) {
  auto diff = first_difference(lhs, rhs);
  checks_.push_back(CheckResult{std::move(name), !diff.has_value(), std::move(diff)});
}

void AxiomReport::append(const AxiomReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool AxiomReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> AxiomReport::failed_names() const {
  std::vector<std::string> out;
  for (const auto& c : checks_) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

std::string AxiomReport::format() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << c.name << ": " << (c.passed ? "pass" : "fail");
    if (c.witness) {
      os << " at (" << c.witness->row << "," << c.witness->col << "): " << c.witness->lhs
         << " != " << c.witness->rhs;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace tqft
