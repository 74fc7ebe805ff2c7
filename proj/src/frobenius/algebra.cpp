#include <set>

#include "tqft/frobenius.hpp"

namespace tqft {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw ShapeError(std::string(what) + " must be " + std::to_string(rows) + "x" +
                     std::to_string(cols) + ", got " + m.shape());
  }
}

}  // namespace

Matrix derive_comult(const Matrix& mult, const Matrix& unit, const Matrix& counit) {
  const std::size_t n = counit.cols();
  if (n == 0) throw ShapeError("counit must have at least one column");
  require_shape(counit, 1, n, "counit");
  require_shape(mult, n, n * n, "mult");
  require_shape(unit, n, 1, "unit");

  const Matrix pairing = compose(counit, mult);  // 1 × n², entry i*n+j is ε(e_i e_j)
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = pairing(0, i * n + j);

  const auto gram_inv = inverse(gram);
  if (!gram_inv) throw DegenerateFormError("degenerate Frobenius form: counit∘mult is singular");

  Matrix copairing(n * n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) copairing(i * n + j, 0) = (*gram_inv)(i, j);

  // Δ = (id ⊗ m) ∘ (γ ⊗ id), with γ ⊗ id : A → A ⊗ A ⊗ A.
  return compose(kron(Matrix::identity(n), mult), kron(copairing, Matrix::identity(n)));
}

FrobeniusAlgebra::FrobeniusAlgebra(std::string name, std::vector<std::string> basis, Matrix mult,
                                   Matrix unit, Matrix counit, std::optional<Matrix> comult)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      counit_(std::move(counit)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw ShapeError("algebra " + name_ + " has an empty basis");
  std::set<std::string> seen;
  for (const auto& label : basis_) {
    if (label.empty()) throw InputError("algebra " + name_ + " has an empty basis label");
    if (!seen.insert(label).second) {
      throw InputError("algebra " + name_ + " repeats basis label \"" + label + "\"");
    }
  }
  require_shape(mult_, n, n * n, "mult");
  require_shape(unit_, n, 1, "unit");
  require_shape(counit_, 1, n, "counit");
  if (comult) {
    require_shape(*comult, n * n, n, "comult");
    comult_ = std::move(*comult);
  } else {
    comult_ = derive_comult(mult_, unit_, counit_);
  }
}

ExtendedFrobeniusAlgebra::ExtendedFrobeniusAlgebra(FrobeniusAlgebra base, Matrix involution,
                                                   Matrix point)
    : base_(std::move(base)), involution_(std::move(involution)), point_(std::move(point)) {
  const std::size_t n = base_.dim();
  require_shape(involution_, n, n, "phi");
  require_shape(point_, n, 1, "theta");
}

}  // namespace tqft
