// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "tqft/catalog.hpp"
#include "tqft/evaluate.hpp"
#include "tqft/frobenius.hpp"

using namespace tqft;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, unsigned density_percent) {
  std::mt19937_64 rng(seed);
  Matrix m(rows, cols);
  for (auto& q : m.entries())
    if (rng() % 100 < density_percent) q = Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
  return m;
}

// The product algebra D⊗Z2⊗KxK has dimension 8, so a 3-strand slice is 512-dimensional.
FrobeniusAlgebra big_algebra() {
  return tensor(tensor(catalog::dual_numbers(), catalog::z2_group_algebra()), catalog::split_algebra());
}

CobordismWord wide_word() {
  using G = Generator;
  return {Orientation::Oriented,
          {{G::Comult, G::Id}, {G::Id, G::Swap}, {G::Mult, G::Id}, {G::Comult, G::Id}, {G::Mult, G::Id}, {G::Mult}}};
}

void BM_Compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1, 30), b = random_matrix(n, n, 2, 30);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}

void BM_ComposeSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1, 30), b = random_matrix(n, n, 2, 30);
  for (auto _ : state) benchmark::DoNotOptimize(serial::compose(a, b));
}

void BM_Kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 3, 50), b = random_matrix(n, n, 4, 50);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}

void BM_KronSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 3, 50), b = random_matrix(n, n, 4, 50);
  for (auto _ : state) benchmark::DoNotOptimize(serial::kron(a, b));
}

void BM_Evaluate(benchmark::State& state) {
  const FrobeniusAlgebra a = big_algebra();
  const CobordismWord w = wide_word();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(w, a));
}

void BM_EvaluateSerial(benchmark::State& state) {
  const FrobeniusAlgebra a = big_algebra();
  const CobordismWord w = wide_word();
  for (auto _ : state) benchmark::DoNotOptimize(serial::evaluate(w, a));
}

void BM_SearchTheta(benchmark::State& state) {
  const FrobeniusAlgebra a = tensor(catalog::split_algebra(), catalog::split_algebra());
  const Matrix id = Matrix::identity(a.dim());
  for (auto _ : state) benchmark::DoNotOptimize(search_theta(a, id, static_cast<unsigned>(state.range(0))));
}

void BM_SearchThetaSerial(benchmark::State& state) {
  const FrobeniusAlgebra a = tensor(catalog::split_algebra(), catalog::split_algebra());
  const Matrix id = Matrix::identity(a.dim());
  for (auto _ : state) benchmark::DoNotOptimize(serial::search_theta(a, id, static_cast<unsigned>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_Compose)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComposeSerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Kron)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KronSerial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Evaluate)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchTheta)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchThetaSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
