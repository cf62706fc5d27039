#include "cyk/parallel/kernels.hpp"

namespace cyk::kernels {

cplx theta_term(const double* n, int g, const CMat& Z, const CVec& w) {
  cplx quad{0.0, 0.0};
  cplx lin{0.0, 0.0};
  for (int i = 0; i < g; ++i) {
    cplx row{0.0, 0.0};
    for (int j = 0; j < g; ++j) row += Z(i, j) * n[j];
    quad += n[i] * row;
    lin += n[i] * w(i);
  }
  return std::exp(cplx{0.0, kPi} * (quad + 2.0 * lin));
}

std::vector<QuadratureResult> integrate_serial(const std::vector<QuadJob>& jobs, const QuadratureOptions& opt) {
  std::vector<QuadratureResult> out;
  out.reserve(jobs.size());
  for (const auto& job : jobs) out.push_back(integrate_adaptive(job.f, job.a, job.b, opt));
  return out;
}

cplx theta_sum_serial(const ThetaLattice& lat, const CMat& Z, const CVec& w) {
  cplx total{0.0, 0.0};
  const std::size_t n = lat.size();
  for (std::size_t k = 0; k < n; ++k) total += theta_term(&lat.points[k * lat.g], lat.g, Z, w);
  return total;
}

std::optional<std::size_t> first_violation_serial(const std::vector<std::vector<int>>& subsets,
                                                  const SubsetPredicate& ok) {
  for (std::size_t i = 0; i < subsets.size(); ++i)
    if (!ok(subsets[i])) return i;
  return std::nullopt;
}

}  // namespace cyk::kernels
