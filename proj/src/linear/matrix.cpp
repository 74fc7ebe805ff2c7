#include "tqft/matrix.hpp"

#include <cstdint>
#include <utility>

#include "tqft/errors.hpp"

namespace tqft {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw ShapeError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                     std::to_string(data_.size()) + " entries");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(std::initializer_list<Rational> values) {
  return Matrix(values.size(), 1, std::vector<Rational>(values));
}

Matrix Matrix::row(std::initializer_list<Rational> values) {
  return Matrix(1, values.size(), std::vector<Rational>(values));
}

const Rational& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw ShapeError("index (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + shape());
  }
  return (*this)(r, c);
}

bool Matrix::is_permutation() const {
  if (!is_square()) return false;
  std::vector<int> col_hits(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    int row_hits = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& v = (*this)(r, c);
      if (v.is_zero()) continue;
      if (v != 1) return false;
      ++row_hits;
      ++col_hits[c];
    }
    if (row_hits != 1) return false;
  }
  for (int h : col_hits) {
    if (h != 1) return false;
  }
  return true;
}

std::string Matrix::shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << m.shape() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os;
}

namespace {

void require_composable(const Matrix& f, const Matrix& g) {
  if (g.rows() != f.cols()) {
    throw ShapeError("cannot compose " + f.shape() + " after " + g.shape());
  }
}

}  // namespace

Matrix compose(const Matrix& f, const Matrix& g) {
  require_composable(f, g);
  const std::size_t rows = f.rows();
  const std::size_t inner = f.cols();
  const std::size_t cols = g.cols();

  // Nonzero column positions of each row of g. Structure maps and
  // permutations are sparse, so this dominates the dense triple loop.
  std::vector<std::vector<std::size_t>> g_support(inner);
  for (std::size_t k = 0; k < inner; ++k) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!g(k, j).is_zero()) g_support[k].push_back(j);
    }
  }

  Matrix out(rows, cols);
  const auto n_rows = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t ii = 0; ii < n_rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < inner; ++k) {
      const Rational& a = f(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j : g_support[k]) out(i, j).add_product(a, g(k, j));
    }
  }
  return out;
}

Matrix kron(const Matrix& f, const Matrix& g) {
  const std::size_t rows = f.rows() * g.rows();
  const std::size_t cols = f.cols() * g.cols();
  Matrix out(rows, cols);
  const auto n_rows = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t rr = 0; rr < n_rows; ++rr) {
    const auto r = static_cast<std::size_t>(rr);
    const std::size_t i1 = r / g.rows();
    const std::size_t i2 = r % g.rows();
    for (std::size_t j1 = 0; j1 < f.cols(); ++j1) {
      const Rational& a = f(i1, j1);
      if (a.is_zero()) continue;
      for (std::size_t j2 = 0; j2 < g.cols(); ++j2) {
        const Rational& b = g(i2, j2);
        if (!b.is_zero()) out(r, j1 * g.cols() + j2) = a * b;
      }
    }
  }
  return out;
}

Matrix kron_power(const Matrix& f, std::size_t k) {
  Matrix out = Matrix::identity(1);
  for (std::size_t i = 0; i < k; ++i) out = kron(out, f);
  return out;
}

std::size_t int_pow(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r *= base;
  return r;
}

Matrix braiding(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) {
    throw InputError("braiding needs positive dimensions, got " + std::to_string(a) + " and " +
                     std::to_string(b));
  }
  Matrix out(a * b, a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) out(j * a + i, i * b + j) = 1;
  }
  return out;
}

Matrix interleaver(std::size_t n, std::size_t a, std::size_t b) {
  const std::size_t size_a = int_pow(a, n);
  const std::size_t size_b = int_pow(b, n);
  Matrix out(size_a * size_b, size_a * size_b);
  std::vector<std::size_t> digits_a(n), digits_b(n);
  for (std::size_t ia = 0; ia < size_a; ++ia) {
    for (std::size_t t = n, x = ia; t-- > 0; x /= a) digits_a[t] = x % a;
    for (std::size_t ib = 0; ib < size_b; ++ib) {
      for (std::size_t t = n, x = ib; t-- > 0; x /= b) digits_b[t] = x % b;
      std::size_t target = 0;
      for (std::size_t t = 0; t < n; ++t) target = target * (a * b) + digits_a[t] * b + digits_b[t];
      out(target, ia * size_b + ib) = 1;
    }
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("cannot invert non-square " + m.shape());
  const std::size_t n = m.rows();
  Matrix work = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) /= scale;
      inv(col, c) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Rational factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

std::optional<EntryDiff> first_difference(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw ShapeError("cannot compare " + lhs.shape() + " with " + rhs.shape());
  }
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      if (lhs(r, c) != rhs(r, c)) return EntryDiff{r, c, lhs(r, c), rhs(r, c)};
    }
  }
  return std::nullopt;
}

}  // namespace tqft
