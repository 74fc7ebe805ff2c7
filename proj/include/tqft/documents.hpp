#pragma once

// JSON documents for algebras and morphisms.
//
// Algebra document:
//   {
//     "name": "D", "dim": 2, "basis": ["1", "x"],
//     "mult":   n×n×n, mult[i][j][k] = coefficient of e_k in e_i·e_j
//     "unit":   n, "counit": n,
//     "comult": n×n×n, comult[i][j][k] = coefficient of e_j⊗e_k in Δ(e_i)   (optional)
//     "extended": { "phi": n×n, phi[i][j] = coefficient of e_i in φ(e_j),
//                   "theta": n }                                        (optional)
//   }
// Morphism document: { "source": name, "target": name, "map": rows × cols }.
// Rationals are JSON integers or "p/q" strings with q > 0.

#include <optional>
#include <string>
#include <string_view>

#include "tqft/frobenius.hpp"

namespace tqft {

struct AlgebraDocument {
  FrobeniusAlgebra algebra;
  std::optional<ExtendedFrobeniusAlgebra> extended;
  bool comult_given = false;
};

struct MorphismDocument {
  std::string source;
  std::string target;
  Matrix map;
};

/// Throws ParseError whose field() names the offending field (e.g. "counit",
/// "mult[1][0]", "extended.theta"). A singular Frobenius form with no comult
/// given surfaces as DegenerateFormError.
AlgebraDocument parse_algebra_document(std::string_view json_text);

/// Always writes comult explicitly; writes the extended block when given.
std::string write_algebra_document(const FrobeniusAlgebra& a,
                                   const ExtendedFrobeniusAlgebra* extended = nullptr);

MorphismDocument parse_morphism_document(std::string_view json_text);
std::string write_morphism_document(const MorphismDocument& doc);

/// A square matrix given either as a morphism document ("map") or as an
/// object with a "phi" table.
Matrix parse_phi_document(std::string_view json_text);

}  // namespace tqft
