#include "tqft/frobenius.hpp"

namespace tqft {

FrobeniusAlgebra tensor(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const Matrix ida = Matrix::identity(na);
  const Matrix idb = Matrix::identity(nb);

  // (A⊗B)⊗(A⊗B) → (A⊗A)⊗(B⊗B) swaps the middle B⊗A; the reverse for Δ.
  const Matrix shuffle_in = kron(kron(ida, braiding(nb, na)), idb);
  const Matrix shuffle_out = kron(kron(ida, braiding(na, nb)), idb);

  std::vector<std::string> labels;
  labels.reserve(na * nb);
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) labels.push_back("(" + x + "," + y + ")");

  return FrobeniusAlgebra(a.name() + "⊗" + b.name(), std::move(labels),
                          compose(kron(a.mult(), b.mult()), shuffle_in),
                          kron(a.unit(), b.unit()), kron(a.counit(), b.counit()),
                          compose(shuffle_out, kron(a.comult(), b.comult())));
}

ExtendedFrobeniusAlgebra tensor_extended(const ExtendedFrobeniusAlgebra& a,
                                         const ExtendedFrobeniusAlgebra& b) {
  return ExtendedFrobeniusAlgebra(tensor(a.base(), b.base()),
                                  kron(a.involution(), b.involution()),
                                  kron(a.point(), b.point()));
}

}  // namespace tqft
