#pragma once

// Commutative Frobenius algebras (A, m, u, Δ, ε) and their extended variant
// (A, m, u, Δ, ε, φ, θ) given by exact structure matrices:
//
//   mult   m : A ⊗ A → A   n × n²
//   unit   u : 1 → A       n × 1
//   counit ε : A → 1       1 × n
//   comult Δ : A → A ⊗ A   n² × n
//   φ      : A → A         n × n   (involution)
//   θ      : 1 → A         n × 1   (cross-cap point)
//
// The monoidal unit 1 is the one-dimensional space and all unitors and
// associators are identities, so they never appear as matrices.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tqft/errors.hpp"
#include "tqft/matrix.hpp"
#include "tqft/report.hpp"

namespace tqft {

class FrobeniusAlgebra {
 public:
  /// Validates every shape against basis.size() and requires distinct, non-empty
  /// basis labels. When `comult` is absent it is derived from (m, u, ε) with
  /// derive_comult, which throws DegenerateFormError for a singular form.
  FrobeniusAlgebra(std::string name, std::vector<std::string> basis, Matrix mult, Matrix unit,
                   Matrix counit, std::optional<Matrix> comult = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const Matrix& mult() const noexcept { return mult_; }
  const Matrix& unit() const noexcept { return unit_; }
  const Matrix& counit() const noexcept { return counit_; }
  const Matrix& comult() const noexcept { return comult_; }

  friend bool operator==(const FrobeniusAlgebra&, const FrobeniusAlgebra&) = default;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  Matrix mult_;
  Matrix unit_;
  Matrix counit_;
  Matrix comult_;
};

class ExtendedFrobeniusAlgebra {
 public:
  ExtendedFrobeniusAlgebra(FrobeniusAlgebra base, Matrix involution, Matrix point);

  const FrobeniusAlgebra& base() const noexcept { return base_; }
  const std::string& name() const noexcept { return base_.name(); }
  std::size_t dim() const noexcept { return base_.dim(); }
  const Matrix& involution() const noexcept { return involution_; }
  const Matrix& point() const noexcept { return point_; }

  friend bool operator==(const ExtendedFrobeniusAlgebra&, const ExtendedFrobeniusAlgebra&) = default;

 private:
  FrobeniusAlgebra base_;
  Matrix involution_;
  Matrix point_;
};

/// A linear map between the underlying spaces of two algebras of the same
/// kind; the candidate for a (extended) Frobenius algebra morphism.
template <class Algebra>
class Morphism {
 public:
  Morphism(Algebra source, Algebra target, Matrix map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (map_.rows() != target_.dim() || map_.cols() != source_.dim()) {
      throw ShapeError("morphism " + source_.name() + " -> " + target_.name() + " needs a " +
                       std::to_string(target_.dim()) + "x" + std::to_string(source_.dim()) +
                       " map, got " + map_.shape());
    }
  }

  const Algebra& source() const noexcept { return source_; }
  const Algebra& target() const noexcept { return target_; }
  const Matrix& map() const noexcept { return map_; }

 private:
  Algebra source_;
  Algebra target_;
  Matrix map_;
};

using FrobeniusMorphism = Morphism<FrobeniusAlgebra>;
using ExtendedFrobeniusMorphism = Morphism<ExtendedFrobeniusAlgebra>;

/// Reconstructs Δ from (m, u, ε). With Gram matrix β[i,j] = ε(e_i e_j) and
/// copairing γ = Σ β⁻¹[i,j] e_i ⊗ e_j, returns Δ(a) = (id ⊗ m)(γ ⊗ a).
/// Throws DegenerateFormError when β is singular, ShapeError on bad shapes.
Matrix derive_comult(const Matrix& mult, const Matrix& unit, const Matrix& counit);

/// Named checks: associativity, left_unit, right_unit, coassociativity,
/// left_counit, right_counit, frobenius_left ((id⊗m)(Δ⊗id) = Δm),
/// frobenius_right (Δm = (m⊗id)(id⊗Δ)), commutativity, cocommutativity.
AxiomReport check_frobenius(const FrobeniusAlgebra& a);

/// The four morphism diagrams: unit, mult, counit, comult.
AxiomReport check_morphism(const FrobeniusMorphism& f);

/// check_morphism plus theta (f θ_A = θ_B) and phi (f φ_A = φ_B f).
AxiomReport check_extended_morphism(const ExtendedFrobeniusMorphism& f);

/// Extended diagrams: involution (φφ = id); phi_unit, phi_mult, phi_counit,
/// phi_comult (φ is a Frobenius endomorphism); theta_fixed
/// (φ m (θ⊗id) = m (θ⊗id)); crosscap (m (θ⊗θ) = m (φ⊗id) Δ u); and the
/// implied phi_theta (φθ = θ) reported separately.
AxiomReport check_extended(const ExtendedFrobeniusAlgebra& e);

/// The θ-independent part of check_extended: involution and phi_unit,
/// phi_mult, phi_counit, phi_comult.
AxiomReport check_involution(const FrobeniusAlgebra& a, const Matrix& phi);

/// A ⊗ B with multiplication (m_A⊗m_B)(id⊗c⊗id), unit u_A⊗u_B,
/// comultiplication (id⊗c⊗id)(Δ_A⊗Δ_B) and counit ε_A⊗ε_B, where c swaps the
/// two middle factors. Basis labels are "(a,b)".
FrobeniusAlgebra tensor(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b);

/// tensor() of the bases with involution φ_A⊗φ_B and point θ_A⊗θ_B.
ExtendedFrobeniusAlgebra tensor_extended(const ExtendedFrobeniusAlgebra& a,
                                         const ExtendedFrobeniusAlgebra& b);

/// All θ with integer coordinates in [-bound, bound]^n for which (A, phi, θ)
/// passes check_extended, in lexicographic order of coordinates. Throws
/// InputError if phi is not an involutive Frobenius endomorphism of A or if
/// bound is zero. The grid is partitioned across threads; output order does
/// not depend on the thread count.
std::vector<Matrix> search_theta(const FrobeniusAlgebra& a, const Matrix& phi, unsigned bound);

namespace serial {
/// Reference search: runs the full check_extended on every grid point.
std::vector<Matrix> search_theta(const FrobeniusAlgebra& a, const Matrix& phi, unsigned bound);
}  // namespace serial

}  // namespace tqft
