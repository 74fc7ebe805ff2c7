#include "tqft/errors.hpp"
#include "tqft/matrix.hpp"

namespace tqft::serial {

Matrix compose(const Matrix& f, const Matrix& g) {
  if (g.rows() != f.cols()) {
    throw ShapeError("cannot compose " + f.shape() + " after " + g.shape());
  }
  Matrix out(f.rows(), g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Rational acc;
      for (std::size_t k = 0; k < f.cols(); ++k) acc += f(i, k) * g(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix kron(const Matrix& f, const Matrix& g) {
  Matrix out(f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i1 = 0; i1 < f.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < f.cols(); ++j1)
      for (std::size_t i2 = 0; i2 < g.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < g.cols(); ++j2)
          out(i1 * g.rows() + i2, j1 * g.cols() + j2) = f(i1, j1) * g(i2, j2);
  return out;
}

}  // namespace tqft::serial
