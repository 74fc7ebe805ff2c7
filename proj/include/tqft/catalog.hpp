#pragma once

// The bundled example algebras.

#include <vector>

#include "tqft/frobenius.hpp"

namespace tqft::catalog {

/// K: the ground field, ε(1) = 1.
FrobeniusAlgebra ground_field();
/// D = K[x]/(x²), ε(1) = 0, ε(x) = 1.
FrobeniusAlgebra dual_numbers();
/// K[Z/2] = K[x]/(x² - 1), ε(1) = 1, ε(x) = 0.
FrobeniusAlgebra z2_group_algebra();
/// K × K in the idempotent basis e1, e2 with ε(e1) = ε(e2) = 1.
FrobeniusAlgebra split_algebra();

/// K with φ = id and θ = sign (sign must be ±1).
ExtendedFrobeniusAlgebra ground_field_extended(int sign = 1);
/// K[Z/2] with φ(x) = -x and θ = 0.
ExtendedFrobeniusAlgebra z2_extended();
/// K × K with φ = id and θ = e1 - e2.
ExtendedFrobeniusAlgebra split_extended();

/// {K, D, Z2, KxK}.
std::vector<FrobeniusAlgebra> battery();
/// {K(θ=1), Z2 with φ(x)=-x, KxK(θ=e1-e2)}.
std::vector<ExtendedFrobeniusAlgebra> extended_battery();

}  // namespace tqft::catalog
