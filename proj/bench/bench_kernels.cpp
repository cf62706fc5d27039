#include <benchmark/benchmark.h>

#include <cmath>

#include "cyk/combinatorics.hpp"
#include "cyk/cover.hpp"
#include "cyk/parallel/kernels.hpp"
#include "cyk/sampling.hpp"
#include "cyk/theta.hpp"

using namespace cyk;

namespace {

struct ThetaSetup {
  CMat Z;
  CVec w;
  kernels::ThetaLattice lat;
};

ThetaSetup theta_setup(int g) {
  Rng rng(1);
  ThetaSetup s;
  s.Z = random_siegel(g, rng);
  s.w = CVec::Constant(g, cplx(0.1, 0.05));
  const RMat Y = s.Z.imag();
  // Wide radius so the sum is large enough to be worth splitting.
  s.lat = theta_lattice(Y, RVec::Zero(g), std::vector<int>(g, 0), 3.0 * theta_radius(Y, 1e-14));
  return s;
}

void BM_ThetaSerial(benchmark::State& st) {
  const auto s = theta_setup(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::theta_sum_serial(s.lat, s.Z, s.w));
  st.counters["terms"] = static_cast<double>(s.lat.size());
}

void BM_ThetaOmp(benchmark::State& st) {
  const auto s = theta_setup(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::theta_sum_omp(s.lat, s.Z, s.w));
  st.counters["terms"] = static_cast<double>(s.lat.size());
  st.counters["threads"] = kernels::max_threads();
}

Arrangement arrangement(int g) {
  std::vector<GaussRational> l;
  for (int i = 0; i <= 2 * g; ++i) l.push_back(GaussRational(Rational(i * i + 1, i + 2)));
  return branch_arrangement(l);
}

void BM_GeneralPositionSerial(benchmark::State& st) {
  const auto a = arrangement(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(general_position(a, false));
}

void BM_GeneralPositionOmp(benchmark::State& st) {
  const auto a = arrangement(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(general_position(a, true));
}

std::vector<kernels::QuadJob> quad_jobs() {
  std::vector<kernels::QuadJob> jobs;
  for (int k = 1; k <= 32; ++k)
    jobs.push_back({[k](double x) {
                      CVec v(3);
                      v << std::exp(-k * x * x), cplx(std::cos(k * x), std::sin(x)), 1.0 / (1.0 + k * x * x);
                      return v;
                    },
                    0.0, 4.0});
  return jobs;
}

void BM_QuadratureSerial(benchmark::State& st) {
  const auto jobs = quad_jobs();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::integrate_serial(jobs, {}));
}

void BM_QuadratureOmp(benchmark::State& st) {
  const auto jobs = quad_jobs();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::integrate_omp(jobs, {}));
}

}  // namespace

BENCHMARK(BM_ThetaSerial)->DenseRange(1, 3);
BENCHMARK(BM_ThetaOmp)->DenseRange(1, 3);
BENCHMARK(BM_GeneralPositionSerial)->DenseRange(3, 5);
BENCHMARK(BM_GeneralPositionOmp)->DenseRange(3, 5);
BENCHMARK(BM_QuadratureSerial);
BENCHMARK(BM_QuadratureOmp);

BENCHMARK_MAIN();
