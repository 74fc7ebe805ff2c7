#pragma once

// Dense exact matrices over the rationals: the concrete model of morphisms
// between finite-dimensional vector spaces.
//
// Tensor convention (used by every module): for f ⊗ g the left factor is
// major, so entry ((i1 * g.rows + i2), (j1 * g.cols + j2)) is f(i1,j1) *
// g(i2,j2). A basis vector e_i ⊗ e_j of A ⊗ B has flat index i * dim(B) + j.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tqft/rational.hpp"

namespace tqft {

class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws ShapeError unless entries.size() == rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix column(std::initializer_list<Rational> values);
  static Matrix row(std::initializer_list<Rational> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const;

  std::span<const Rational> entries() const noexcept { return data_; }
  std::span<Rational> entries() noexcept { return data_; }

  /// Exactly one 1 per row and column, zeros elsewhere.
  bool is_permutation() const;

  /// "RxC", e.g. "4x2".
  std::string shape() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// f ∘ g, i.e. the product f·g acting on column vectors. Requires
/// g.rows() == f.cols(); throws ShapeError naming both shapes otherwise.
/// Rows of the result are computed in parallel and zero entries are skipped.
Matrix compose(const Matrix& f, const Matrix& g);

/// f ⊗ g with left-major indexing (see the header comment).
Matrix kron(const Matrix& f, const Matrix& g);

/// f^{⊗k}; the 0-th power is the 1×1 identity on the unit object.
Matrix kron_power(const Matrix& f, std::size_t k);

/// The symmetric braiding c: A ⊗ B → B ⊗ A for dim A = a, dim B = b, sending
/// e_i ⊗ e_j to e_j ⊗ e_i. Throws InputError for a zero dimension.
Matrix braiding(std::size_t a, std::size_t b);

/// Permutation identifying A^{⊗n} ⊗ B^{⊗n} with (A ⊗ B)^{⊗n}: the basis
/// index ((i1..in),(j1..jn)) is sent to ((i1,j1),...,(in,jn)). n = 0 gives [1].
Matrix interleaver(std::size_t n, std::size_t a, std::size_t b);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// One entry where two equally shaped matrices disagree.
struct EntryDiff {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational lhs;
  Rational rhs;
};

/// First differing entry in row-major order, nullopt when equal. Throws
/// ShapeError if the shapes differ.
std::optional<EntryDiff> first_difference(const Matrix& lhs, const Matrix& rhs);

std::size_t int_pow(std::size_t base, std::size_t exponent);

// Single-threaded textbook kernels, kept as the reference the parallel
// kernels are tested and benchmarked against.
namespace serial {
Matrix compose(const Matrix& f, const Matrix& g);
Matrix kron(const Matrix& f, const Matrix& g);
}  // namespace serial

}  // namespace tqft
