#include <cstdint>

#include "tqft/frobenius.hpp"

namespace tqft {

namespace {

void require_valid_involution(const FrobeniusAlgebra& a, const Matrix& phi, unsigned bound) {
  if (bound == 0) throw InputError("search bound must be positive");
  const AxiomReport r = check_involution(a, phi);
  if (!r.passed()) {
    throw InputError("phi is not an involutive Frobenius endomorphism (" + r.failed_names().front() +
                     " fails)");
  }
}

// Grid point number `index` in lexicographic order, first coordinate most
// significant, each coordinate ranging over -bound..bound.
Matrix grid_point(std::size_t index, std::size_t n, unsigned bound) {
  const std::size_t side = 2 * std::size_t{bound} + 1;
  Matrix theta(n, 1);
  for (std::size_t t = n; t-- > 0; index /= side) {
    theta(t, 0) = static_cast<long>(index % side) - static_cast<long>(bound);
  }
  return theta;
}

}  // namespace

std::vector<Matrix> search_theta(const FrobeniusAlgebra& a, const Matrix& phi, unsigned bound) {
  require_valid_involution(a, phi, bound);
  const std::size_t n = a.dim();
  const std::size_t total = int_pow(2 * std::size_t{bound} + 1, n);
  const Matrix id = Matrix::identity(n);

  // With φ already validated only the two θ-dependent diagrams remain:
  // theta_fixed and crosscap.
  const Matrix crosscap_rhs =
      compose(compose(a.mult(), kron(phi, id)), compose(a.comult(), a.unit()));

  std::vector<char> hit(total, 0);
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < count; ++k) {
    const Matrix theta = grid_point(static_cast<std::size_t>(k), n, bound);
    if (compose(a.mult(), kron(theta, theta)) != crosscap_rhs) continue;
    const Matrix times_theta = compose(a.mult(), kron(theta, id));
    if (compose(phi, times_theta) != times_theta) continue;
    hit[static_cast<std::size_t>(k)] = 1;
  }

  std::vector<Matrix> out;
  for (std::size_t k = 0; k < total; ++k) {
    if (hit[k]) out.push_back(grid_point(k, n, bound));
  }
  return out;
}

namespace serial {

std::vector<Matrix> search_theta(const FrobeniusAlgebra& a, const Matrix& phi, unsigned bound) {
  require_valid_involution(a, phi, bound);
  const std::size_t n = a.dim();
  const std::size_t total = int_pow(2 * std::size_t{bound} + 1, n);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < total; ++k) {
    Matrix theta = grid_point(k, n, bound);
    if (check_extended(ExtendedFrobeniusAlgebra(a, phi, theta)).passed()) {
      out.push_back(std::move(theta));
    }
  }
  return out;
}

}  // namespace serial

}  // namespace tqft
