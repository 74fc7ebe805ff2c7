#pragma once

// The TQFT determined by a (extended) commutative Frobenius algebra, applied
// to cobordism words: each generator goes to its structure map, slices go to
// Kronecker products, and gluing goes to composition. Closed words give
// scalars, the surface invariants.

#include <cstdint>
#include <random>

#include "tqft/cobordism.hpp"
#include "tqft/frobenius.hpp"
#include "tqft/rational.hpp"
#include "tqft/report.hpp"

namespace tqft {

/// Matrix of shape n^target × n^source. Throws ArityError for invalid words and
/// CapabilityError when a Phi or Theta generator meets a plain algebra.
///
/// Each generator is contracted into the running state on its own strands,
/// never materialising the Kronecker product of a slice; output entries are
/// filled in parallel.
Matrix evaluate(const CobordismWord& w, const FrobeniusAlgebra& a);
Matrix evaluate(const CobordismWord& w, const ExtendedFrobeniusAlgebra& a);

/// Scalar value of a closed word. Throws ArityError unless the word is (0,0).
Rational invariant(const CobordismWord& w, const FrobeniusAlgebra& a);
Rational invariant(const CobordismWord& w, const ExtendedFrobeniusAlgebra& a);

/// Single check "monoidal_naturality":
///   evaluate(w, A⊗B) ∘ J_source = J_target ∘ (evaluate(w, A) ⊗ evaluate(w, B))
/// with J = interleaver(arity, dim A, dim B).
AxiomReport check_monoidal_naturality(const CobordismWord& w, const FrobeniusAlgebra& a,
                                      const FrobeniusAlgebra& b);
AxiomReport check_monoidal_naturality(const CobordismWord& w, const ExtendedFrobeniusAlgebra& a,
                                      const ExtendedFrobeniusAlgebra& b);

/// Single check "multiplicativity": invariant(w, A⊗B) = invariant(w, A)·invariant(w, B).
AxiomReport check_multiplicativity(const CobordismWord& w, const FrobeniusAlgebra& a,
                                   const FrobeniusAlgebra& b);
AxiomReport check_multiplicativity(const CobordismWord& w, const ExtendedFrobeniusAlgebra& a,
                                   const ExtendedFrobeniusAlgebra& b);

/// Single check "naturality": f^{⊗t} ∘ evaluate(w, source) = evaluate(w, target) ∘ f^{⊗s}.
AxiomReport check_naturality(const FrobeniusMorphism& f, const CobordismWord& w);
AxiomReport check_naturality(const ExtendedFrobeniusMorphism& f, const CobordismWord& w);

struct RandomWordLimits {
  std::size_t max_slices = 6;
  std::size_t max_strands = 4;  // bound on every boundary, including source and target
};

/// A valid word drawn from `rng`. Oriented words use Id, Cup, Cap, Mult,
/// Comult and Swap; unoriented ones add Phi and Theta. Only raw engine output
/// is consumed, so a given seed yields the same word on every platform.
CobordismWord random_word(std::mt19937_64& rng, Orientation o, const RandomWordLimits& limits = {});

namespace serial {
/// Reference evaluation: the Kronecker product of each slice, composed slice
/// after slice with the serial kernels.
Matrix evaluate(const CobordismWord& w, const FrobeniusAlgebra& a);
Matrix evaluate(const CobordismWord& w, const ExtendedFrobeniusAlgebra& a);
}  // namespace serial

}  // namespace tqft
