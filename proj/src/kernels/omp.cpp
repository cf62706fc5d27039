#include <atomic>
#include <exception>
#include <limits>

#include <omp.h>

#include "cyk/parallel/kernels.hpp"

namespace cyk::kernels {

int max_threads() { return omp_get_max_threads(); }

std::vector<QuadratureResult> integrate_omp(const std::vector<QuadJob>& jobs, const QuadratureOptions& opt) {
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
  std::vector<QuadratureResult> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = integrate_adaptive(jobs[i].f, jobs[i].a, jobs[i].b, opt);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

cplx theta_sum_omp(const ThetaLattice& lat, const CMat& Z, const CVec& w) {
  const std::size_t n = lat.size();
  const std::size_t chunks = (n + kThetaChunk - 1) / kThetaChunk;
  std::vector<cplx> partial(chunks, cplx{0.0, 0.0});
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kThetaChunk;
    const std::size_t hi = std::min(n, lo + kThetaChunk);
    cplx acc{0.0, 0.0};
    for (std::size_t k = lo; k < hi; ++k) acc += theta_term(&lat.points[k * lat.g], lat.g, Z, w);
    partial[c] = acc;
  }
  cplx total{0.0, 0.0};
  for (const cplx& p : partial) total += p;
  return total;
}

std::optional<std::size_t> first_violation_omp(const std::vector<std::vector<int>>& subsets,
                                               const SubsetPredicate& ok) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> first{none};
  const auto n = static_cast<std::ptrdiff_t>(subsets.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx >= first.load(std::memory_order_relaxed)) continue;
    if (!ok(subsets[idx])) {
      std::size_t cur = first.load();
      while (idx < cur && !first.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  const std::size_t f = first.load();
  if (f == none) return std::nullopt;
  return f;
}

}  // namespace cyk::kernels
