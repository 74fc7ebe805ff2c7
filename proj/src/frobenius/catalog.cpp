#include "tqft/catalog.hpp"

namespace tqft::catalog {

FrobeniusAlgebra ground_field() {
  return FrobeniusAlgebra("K", {"1"}, Matrix{{1}}, Matrix::column({1}), Matrix::row({1}));
}

FrobeniusAlgebra dual_numbers() {
  return FrobeniusAlgebra("D", {"1", "x"}, Matrix{{1, 0, 0, 0}, {0, 1, 1, 0}},
                          Matrix::column({1, 0}), Matrix::row({0, 1}));
}

FrobeniusAlgebra z2_group_algebra() {
  return FrobeniusAlgebra("Z2", {"1", "x"}, Matrix{{1, 0, 0, 1}, {0, 1, 1, 0}},
                          Matrix::column({1, 0}), Matrix::row({1, 0}));
}

FrobeniusAlgebra split_algebra() {
  return FrobeniusAlgebra("KxK", {"e1", "e2"}, Matrix{{1, 0, 0, 0}, {0, 0, 0, 1}},
                          Matrix::column({1, 1}), Matrix::row({1, 1}));
}

ExtendedFrobeniusAlgebra ground_field_extended(int sign) {
  if (sign != 1 && sign != -1) throw InputError("ground field point must be +1 or -1");
  return ExtendedFrobeniusAlgebra(ground_field(), Matrix{{1}}, Matrix::column({sign}));
}

ExtendedFrobeniusAlgebra z2_extended() {
  return ExtendedFrobeniusAlgebra(z2_group_algebra(), Matrix{{1, 0}, {0, -1}},
                                  Matrix::column({0, 0}));
}

ExtendedFrobeniusAlgebra split_extended() {
  return ExtendedFrobeniusAlgebra(split_algebra(), Matrix::identity(2), Matrix::column({1, -1}));
}

std::vector<FrobeniusAlgebra> battery() {
  return {ground_field(), dual_numbers(), z2_group_algebra(), split_algebra()};
}

std::vector<ExtendedFrobeniusAlgebra> extended_battery() {
  return {ground_field_extended(1), z2_extended(), split_extended()};
}

}  // namespace tqft::catalog
