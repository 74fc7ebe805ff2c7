#include "tqft/rational.hpp"

#include <cctype>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw InputError("not a rational: \"" + std::string(text) + "\"");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  if (slash == std::string_view::npos) return Rational(mpz_class(num_str), mpz_class(1));

  const std::string_view den = s.substr(slash + 1);
  // The denominator carries no sign: "p/q" requires q > 0.
  if (!is_integer_literal(den, false)) {
    throw InputError("not a rational: \"" + std::string(text) + "\"");
  }
  const mpz_class q{std::string(den)};
  if (q == 0) throw InputError("rational with zero denominator: \"" + std::string(text) + "\"");
  return Rational(mpz_class(num_str), q);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InputError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

void Rational::add_product(const Rational& b, const Rational& c) {
  if (b.is_zero() || c.is_zero()) return;
  mpq_class t;
  mpq_mul(t.get_mpq_t(), b.value_.get_mpq_t(), c.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), t.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace tqft
