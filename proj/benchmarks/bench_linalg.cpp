#include <benchmark/benchmark.h>

#include <random>

#include "hopfkit/matrix.hpp"

using namespace hopfkit;

namespace {

Matrix random_matrix(const Field& f, int rows, int cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Scalar::from_int(f, static_cast<long long>(rng() % 19) - 9);
  return m;
}

void BM_rref_rational(benchmark::State& state) {
  std::mt19937_64 rng(42);
  Matrix A = random_matrix(Field::rationals(), static_cast<int>(state.range(0)),
                           static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(A));
}
BENCHMARK(BM_rref_rational)->Arg(8)->Arg(16)->Arg(32);

void BM_rref_prime(benchmark::State& state) {
  std::mt19937_64 rng(42);
  Matrix A = random_matrix(Field::prime(7), static_cast<int>(state.range(0)),
                           static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(A));
}
BENCHMARK(BM_rref_prime)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_kronecker(benchmark::State& state) {
  std::mt19937_64 rng(1);
  int n = static_cast<int>(state.range(0));
  Matrix A = random_matrix(Field::rationals(), n, n, rng);
  Matrix B = random_matrix(Field::rationals(), n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kronecker(A, B));
}
BENCHMARK(BM_kronecker)->Arg(4)->Arg(8)->Arg(16);

void BM_kernel_prime(benchmark::State& state) {
  std::mt19937_64 rng(3);
  int n = static_cast<int>(state.range(0));
  Matrix A = random_matrix(Field::prime(7), n / 2, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_matrix(A));
}
BENCHMARK(BM_kernel_prime)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
