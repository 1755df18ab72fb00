#include <benchmark/benchmark.h>

#include "chernform/chernform.hpp"

using namespace chernform;

namespace {

Form random_one_form_sum(int n, std::uint64_t seed) {
  const CurvatureTensor t = random_tensor(n, 1, 1, ScalarMode::Float, seed);
  return factor_from_tensor(t).at(0, 0);
}

void BM_WedgeOneOneForms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CurvatureMatrix omega = bott_chern_curvature(factor_from_tensor(random_tensor(n, 2, 2, ScalarMode::Float, 1)));
  const Form a = omega.at(0, 0);
  const Form b = omega.at(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_WedgeOneOneForms)->DenseRange(2, 8, 2);

void BM_Evaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Form psi = wedge(random_one_form_sum(n, 2), random_one_form_sum(n, 3));
  const Form phi = wedge(psi, conjugate(psi)) * Scalar::imag_unit(ScalarMode::Float).pow(4);
  NormalStream stream(4);
  std::vector<std::vector<std::complex<double>>> xs(2, std::vector<std::complex<double>>(static_cast<std::size_t>(n)));
  for (auto& v : xs)
    for (auto& z : v) z = stream.complex_normal();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_float(phi, xs));
}
BENCHMARK(BM_Evaluate)->DenseRange(2, 8, 2);

void BM_ChernForms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const CurvatureMatrix omega = bott_chern_curvature(factor_from_tensor(random_tensor(n, r, 3, ScalarMode::Float, 5)));
  for (auto _ : state) benchmark::DoNotOptimize(chern_forms(omega));
}
BENCHMARK(BM_ChernForms)->ArgsProduct({{2, 3, 4}, {2, 3, 4}});

void BM_ChernFormsExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CurvatureMatrix omega = bott_chern_curvature(factor_from_tensor(random_tensor(n, n, 2, ScalarMode::Exact, 6)));
  for (auto _ : state) benchmark::DoNotOptimize(chern_forms(omega, PrefactorMode::Exact));
}
BENCHMARK(BM_ChernFormsExact)->DenseRange(2, 4);

void BM_SchurVerify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CurvatureTensor t = random_tensor(n, n, 3, ScalarMode::Float, 7);
  for (auto _ : state) benchmark::DoNotOptimize(verify_schur_nonnegativity(t, 1, n, {50, 7, 1e-9}));
}
BENCHMARK(BM_SchurVerify)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SchurPolynomial(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (const Partition& lambda : partitions(i, i)) benchmark::DoNotOptimize(schur_polynomial(lambda, i));
}
BENCHMARK(BM_SchurPolynomial)->DenseRange(2, 8, 2);

void BM_ToddPolynomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(todd_polynomial(n));
}
BENCHMARK(BM_ToddPolynomial)->DenseRange(2, 8, 2);

void BM_RiemannRoch(benchmark::State& state) {
  const ModelManifold m = parse_model("CP2xCP2");
  const RingElement k = parse_line(m, "K");
  for (auto _ : state)
    for (long mm = -5; mm <= 5; ++mm) benchmark::DoNotOptimize(euler_characteristic(m, k, mm));
}
BENCHMARK(BM_RiemannRoch);

}  // namespace
BENCHMARK_MAIN();
