#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cyk/linalg.hpp"
#include "cyk/quadrature.hpp"

// Hot loops in two flavours: a plain serial reference and an OpenMP version
// whose result does not depend on the thread count or schedule.
namespace cyk::kernels {

struct QuadJob {
  Integrand f;
  double a = 0.0;
  double b = 1.0;
};

std::vector<QuadratureResult> integrate_serial(const std::vector<QuadJob>& jobs, const QuadratureOptions& opt);
std::vector<QuadratureResult> integrate_omp(const std::vector<QuadJob>& jobs, const QuadratureOptions& opt);

// Lattice points n (characteristic shift already applied), flattened g at a time.
struct ThetaLattice {
  int g = 0;
  std::vector<double> points;
  std::size_t size() const { return g == 0 ? 0 : points.size() / static_cast<std::size_t>(g); }
};

// exp(pi i n^t Z n + 2 pi i n^t w) for one lattice point.
cplx theta_term(const double* n, int g, const CMat& Z, const CVec& w);

// sum_n exp(pi i n^t Z n + 2 pi i n^t w)
cplx theta_sum_serial(const ThetaLattice& lat, const CMat& Z, const CVec& w);
// Same sum in fixed chunks of kThetaChunk terms, chunk sums added in index order.
cplx theta_sum_omp(const ThetaLattice& lat, const CMat& Z, const CVec& w);
inline constexpr std::size_t kThetaChunk = 1024;

using SubsetPredicate = std::function<bool(const std::vector<int>&)>;

// Index of the first subset (in list order) failing ok, if any.
std::optional<std::size_t> first_violation_serial(const std::vector<std::vector<int>>& subsets,
                                                  const SubsetPredicate& ok);
std::optional<std::size_t> first_violation_omp(const std::vector<std::vector<int>>& subsets,
                                               const SubsetPredicate& ok);

int max_threads();

}  // namespace cyk::kernels
