#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tqft {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix shapes that do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied value outside an operation's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

// The pairing counit∘mult has a singular Gram matrix.
class DegenerateFormError : public Error {
 public:
  using Error::Error;
};

// Boundary-circle bookkeeping failure in a cobordism word. `slice()` is the
// 1-based slice number at fault, or 0 when the failure is not tied to a slice.
class ArityError : public Error {
 public:
  ArityError(std::size_t slice, const std::string& what)
      : Error(what), slice_(slice) {}
  std::size_t slice() const noexcept { return slice_; }

 private:
  std::size_t slice_;
};

// A word uses the orientation-reversing or cross-cap generator but the
// algebra carries no extended structure.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Malformed text or document input. `field()` names the offending field or
// line when known.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace tqft
