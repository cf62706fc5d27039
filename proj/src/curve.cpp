#include "cyk/curve.hpp"

#include <algorithm>
#include <cmath>

#include "cyk/error.hpp"
#include "cyk/parallel/kernels.hpp"

namespace cyk {

namespace {

bool lex_less(cplx a, cplx b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); }

// Analytic continuation of y along the straight segment z0 -> z1. Exact as
// long as no branch point lies on the closed segment (z1 may be one).
cplx continue_y(const HyperellipticCurve& c, cplx y0, cplx z0, cplx z1) {
  cplx y = y0;
  for (cplx lam : c.branch_points) y *= std::sqrt((z1 - lam) / (z0 - lam));
  return y;
}

void fill_powers(CVec& out, cplx z, cplx factor) {
  cplx p = factor;
  for (Eigen::Index j = 0; j < out.size(); ++j) {
    out(j) = p;
    p *= z;
  }
}

// Integral of omega from branch point e to anchor m along the segment,
// with z = lam_e + (m - lam_e) s^2; the 1/sqrt endpoint factor cancels.
kernels::QuadJob to_branch_job(const HyperellipticCurve& c, int e, cplx m, cplx ym) {
  kernels::QuadJob job;
  job.f = [&c, e, m, ym](double s) {
    const cplx lam = c.branch_points[e];
    const cplx z = lam + (m - lam) * (s * s);
    cplx denom = ym;
    for (int n = 0; n < static_cast<int>(c.branch_points.size()); ++n) {
      if (n == e) continue;
      denom *= std::sqrt((z - c.branch_points[n]) / (m - c.branch_points[n]));
    }
    CVec out(c.genus);
    fill_powers(out, z, 2.0 * (m - lam) / denom);
    return out;
  };
  return job;
}

void require_supported(const HyperellipticCurve& c) {
  if (c.genus >= 2 && !c.real_ordered()) {
    throw Error(ErrorCode::UnsupportedComplexBranchPoints,
                "complex branch points are only supported in genus 1");
  }
}

QuadratureOptions quad_options(double tol, int nodes) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  QuadratureOptions q;
  q.tol = std::max(tol, 100.0 * std::numeric_limits<double>::epsilon());
  q.nodes = nodes;
  return q;
}

std::vector<QuadratureResult> run_jobs(const std::vector<kernels::QuadJob>& jobs, const QuadratureOptions& q,
                                       bool parallel) {
  return parallel ? kernels::integrate_omp(jobs, q) : kernels::integrate_serial(jobs, q);
}

}  // namespace

bool HyperellipticCurve::real_ordered() const {
  return std::all_of(branch_points.begin(), branch_points.end(), [](cplx z) { return z.imag() == 0.0; });
}

double HyperellipticCurve::min_gap() const {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < branch_points.size(); ++i)
    for (std::size_t j = i + 1; j < branch_points.size(); ++j)
      gap = std::min(gap, std::abs(branch_points[i] - branch_points[j]));
  return gap;
}

double HyperellipticCurve::scale() const {
  double s = 1.0;
  for (cplx z : branch_points) s = std::max(s, std::abs(z));
  return s;
}

cplx HyperellipticCurve::polynomial(cplx z) const {
  cplx f{1.0, 0.0};
  for (cplx lam : branch_points) f *= (z - lam);
  return f;
}

HyperellipticCurve new_curve(std::vector<cplx> pts) {
  if (pts.size() % 2 == 0) {
    throw Error(ErrorCode::EvenCount, "expected 2g+1 finite branch points, infinity is implied");
  }
  if (pts.size() < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 finite branch points");
  for (cplx z : pts)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::InvalidArgument, "branch points must be finite");
  std::sort(pts.begin(), pts.end(), lex_less);
  HyperellipticCurve c;
  c.genus = static_cast<int>(pts.size() - 1) / 2;
  c.branch_points = std::move(pts);
  const double merge = 1e-12 * c.scale();
  for (std::size_t i = 0; i < c.branch_points.size(); ++i)
    for (std::size_t j = i + 1; j < c.branch_points.size(); ++j)
      if (std::abs(c.branch_points[i] - c.branch_points[j]) <= merge)
        throw Error(ErrorCode::DuplicateBranchPoint, "branch points " + std::to_string(i) + " and " +
                                                         std::to_string(j) + " coincide");
  return c;
}

std::vector<Differential> holomorphic_basis(const HyperellipticCurve& curve) {
  std::vector<Differential> out;
  for (int k = 0; k < curve.genus; ++k) out.push_back({k});
  return out;
}

cplx canonical_y(const HyperellipticCurve& curve, cplx z) {
  cplx y{0.0, 1.0};
  for (cplx lam : curve.branch_points) {
    cplx w = lam - z;
    if (w.imag() == 0.0) w = cplx(w.real(), -0.0);
    y *= std::sqrt(w);
  }
  return y;
}

std::vector<std::pair<int, int>> Contour::crossings() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < static_cast<int>(chain.size()); ++k)
    for (int r = 0; r < std::abs(chain[k]); ++r) out.emplace_back(k, k + 1);
  return out;
}

IMat chain_intersection(int n) {
  IMat c = IMat::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) {
    c(k, k + 1) = 1;
    c(k + 1, k) = -1;
  }
  return c;
}

CycleBasis build_cycles(const HyperellipticCurve& curve) {
  const int g = curve.genus;
  CycleBasis cb;
  cb.genus = g;
  for (int i = 0; i < g; ++i) {
    Contour a{std::vector<int>(2 * g, 0)};
    a.chain[2 * i] = 1;
    cb.a_cycles.push_back(a);
    Contour b{std::vector<int>(2 * g, 0)};
    for (int l = i; l < g; ++l) b.chain[2 * l + 1] = 1;
    cb.b_cycles.push_back(b);
  }
  return cb;
}

IMat intersection_matrix(const CycleBasis& cycles) {
  const int g = cycles.genus;
  IMat gamma(2 * g, 2 * g);
  for (int i = 0; i < g; ++i)
    for (int k = 0; k < 2 * g; ++k) {
      gamma(i, k) = cycles.a_cycles[i].chain[k];
      gamma(g + i, k) = cycles.b_cycles[i].chain[k];
    }
  return gamma * chain_intersection(2 * g) * gamma.transpose();
}

NormalizedPeriods normalize_periods(const CMat& raw) {
  const auto g = raw.rows();
  if (g == 0 || raw.cols() != 2 * g) throw Error(ErrorCode::DimensionMismatch, "raw periods must be g x 2g");
  const CMat a = raw.leftCols(g);
  const CMat b = raw.rightCols(g);
  Eigen::JacobiSVD<CMat> svd(a);
  const RVec sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(g - 1) / sv(0) < 1e-13) {
    throw Error(ErrorCode::SingularABlock, "A-period block is singular");
  }
  NormalizedPeriods out;
  out.Z = a.fullPivLu().solve(b);
  out.residuals.symmetry = max_abs(CMat(out.Z - out.Z.transpose()));
  const RMat im = ((out.Z + out.Z.transpose()) / 2.0).imag();
  out.residuals.min_eig_im = min_eig_symmetric(im);
  return out;
}

PeriodMatrix period_matrix(const HyperellipticCurve& curve, const CycleBasis& cycles, double tol,
                           const PeriodOptions& opt) {
  require_supported(curve);
  const int g = curve.genus;
  const int nseg = 2 * g;
  const auto& lam = curve.branch_points;
  const QuadratureOptions q = quad_options(tol, opt.nodes);

  // Anchor y at the midpoint of each chain segment. Segment k+1 inherits its
  // branch from segment k by turning clockwise around their common endpoint.
  std::vector<cplx> mid(nseg), ymid(nseg);
  mid[0] = 0.5 * (lam[0] + lam[1]);
  ymid[0] = canonical_y(curve, mid[0]);
  const double r = 0.25 * curve.min_gap();
  for (int k = 0; k + 1 < nseg; ++k) {
    const cplx pivot = lam[k + 1];
    const double th_in = std::arg(lam[k] - pivot);
    const double th_out = std::arg(lam[k + 2] - pivot);
    double sweep = std::fmod(th_in - th_out, 2.0 * kPi);
    if (sweep <= 0.0) sweep += 2.0 * kPi;
    cplx z = pivot + r * std::polar(1.0, th_in);
    cplx y = continue_y(curve, ymid[k], mid[k], z);
    const int steps = static_cast<int>(std::ceil(sweep / (kPi / 8.0)));
    for (int s = 1; s <= steps; ++s) {
      const cplx next = pivot + r * std::polar(1.0, th_in - sweep * s / steps);
      y = continue_y(curve, y, z, next);
      z = next;
    }
    mid[k + 1] = 0.5 * (lam[k + 1] + lam[k + 2]);
    ymid[k + 1] = continue_y(curve, y, z, mid[k + 1]);
  }

  std::vector<kernels::QuadJob> jobs;
  for (int k = 0; k < nseg; ++k) {
    jobs.push_back(to_branch_job(curve, k, mid[k], ymid[k]));
    jobs.push_back(to_branch_job(curve, k + 1, mid[k], ymid[k]));
  }
  const auto res = run_jobs(jobs, q, opt.parallel);

  PeriodMatrix pm;
  pm.chain_periods = CMat(g, nseg);
  double qerr = 0.0;
  for (int k = 0; k < nseg; ++k) {
    pm.chain_periods.col(k) = 2.0 * (res[2 * k].value - res[2 * k + 1].value);
    qerr = std::max(qerr, 2.0 * (res[2 * k].error_estimate + res[2 * k + 1].error_estimate));
  }
  pm.raw = CMat::Zero(g, 2 * g);
  for (int i = 0; i < g; ++i)
    for (int k = 0; k < nseg; ++k) {
      pm.raw.col(i) += static_cast<double>(cycles.a_cycles[i].chain[k]) * pm.chain_periods.col(k);
      pm.raw.col(g + i) += static_cast<double>(cycles.b_cycles[i].chain[k]) * pm.chain_periods.col(k);
    }
  auto norm = normalize_periods(pm.raw);
  pm.Z = norm.Z;
  pm.residuals = norm.residuals;
  pm.residuals.quadrature_error = qerr;
  return pm;
}

CurvePoint point_from_xy(const HyperellipticCurve& curve, cplx z, cplx y, double tol) {
  const cplx f = curve.polynomial(z);
  const double scale = std::max(1.0, std::abs(f));
  if (std::abs(y * y - f) > tol * scale) throw Error(ErrorCode::InvalidArgument, "point is not on the curve");
  const cplx yhat = canonical_y(curve, z);
  return {z, std::abs(y - yhat) <= std::abs(y + yhat) ? 1 : -1, false};
}

CVec abel_integral(const HyperellipticCurve& curve, const CurvePoint& p, const AbelOptions& opt) {
  const int g = curve.genus;
  if (p.infinity) return CVec::Zero(g);
  require_supported(curve);
  const auto& lam = curve.branch_points;
  const int nb = static_cast<int>(lam.size());
  const cplx P = p.z;

  int e = -1;
  for (int n = 0; n < nb; ++n)
    if (std::abs(P - lam[n]) <= 1e-12 * curve.scale()) e = n;
  const cplx Pz = e >= 0 ? lam[e] : P;

  // The path is the ray from P to infinity in the direction of best clearance.
  double best = -1.0;
  cplx dir{1.0, 0.0};
  constexpr int kDirections = 64;
  for (int k = 0; k < kDirections; ++k) {
    const cplx d = std::polar(1.0, 2.0 * kPi * k / kDirections + 0.05);
    double clearance = std::numeric_limits<double>::infinity();
    for (int n = 0; n < nb; ++n) {
      if (n == e) continue;
      const cplx rel = (lam[n] - Pz) * std::conj(d);
      clearance = std::min(clearance, rel.real() < 0.0 ? std::abs(rel) : std::abs(rel.imag()));
    }
    if (clearance > best) {
      best = clearance;
      dir = d;
    }
  }
  if (best < 1e-3 * curve.min_gap()) {
    throw Error(ErrorCode::PathThroughBranchPoint, "no integration path clears the branch points");
  }

  double reach = 0.0;
  for (cplx l : lam) reach = std::max(reach, std::abs(l - Pz));
  const double L = 1.0 + 2.0 * reach;
  const cplx Q = Pz + L * dir;
  const cplx dL = dir * L;

  // Ray from infinity to Q: z = Q + dL (1/t^2 - 1). Written so the integrand
  // is analytic at t = 0.
  std::vector<cplx> c(nb);
  for (int n = 0; n < nb; ++n) c[n] = (Q - lam[n]) / dL - 1.0;
  const cplx e0 = Q / dL - 1.0;
  const cplx sqrt_dL = std::sqrt(dL);
  cplx yQ = sqrt_dL * std::pow(dL, g);
  for (int n = 0; n < nb; ++n) yQ *= std::sqrt(1.0 + c[n]);

  std::vector<kernels::QuadJob> jobs(2);
  jobs[0].f = [g, c, e0, dL, sqrt_dL](double t) {
    const double t2 = t * t;
    cplx prod{1.0, 0.0};
    for (const cplx& cn : c) prod *= std::sqrt(1.0 + t2 * cn);
    const cplx w = 1.0 + t2 * e0;
    CVec out(g);
    for (int j = 0; j < g; ++j)
      out(j) = -2.0 * sqrt_dL * std::pow(dL, j - g) * std::pow(t, 2 * (g - 1 - j)) * std::pow(w, j) / prod;
    return out;
  };

  if (e >= 0) {
    jobs[1] = to_branch_job(curve, e, Q, yQ);
  } else {
    jobs[1].f = [&curve, g, Q, Pz, yQ](double u) {
      const cplx z = Q + (Pz - Q) * u;
      cplx y = yQ;
      for (cplx l : curve.branch_points) y *= std::sqrt((z - l) / (Q - l));
      CVec out(g);
      fill_powers(out, z, (Pz - Q) / y);
      return out;
    };
  }
  const auto res = run_jobs(jobs, quad_options(opt.tol, opt.nodes), opt.parallel);
  // to_branch_job integrates from the branch point outwards; reverse it.
  CVec total = res[0].value + (e >= 0 ? CVec(-res[1].value) : res[1].value);

  if (e < 0) {
    const cplx yP = continue_y(curve, yQ, Q, Pz);
    const cplx target = static_cast<double>(p.sheet >= 0 ? 1 : -1) * canonical_y(curve, Pz);
    if (std::abs(yP - target) > std::abs(yP + target)) total = -total;
  }
  return total;
}

JacobianPoint abel_jacobi(const HyperellipticCurve& curve, const PeriodMatrix& periods,
                          const std::vector<CurvePoint>& points, const CurvePoint& base, const AbelOptions& opt) {
  const int g = curve.genus;
  if (periods.raw.rows() != g) throw Error(ErrorCode::DimensionMismatch, "periods do not match the curve");
  CVec raw = CVec::Zero(g);
  for (const auto& p : points) raw += abel_integral(curve, p, opt);
  if (!base.infinity) raw -= static_cast<double>(points.size()) * abel_integral(curve, base, opt);
  JacobianPoint jp;
  jp.Z = periods.Z;
  jp.vector = periods.raw.leftCols(g).fullPivLu().solve(raw);
  jp.reduced = reduce_mod_lattice(jp.vector, jp.Z);
  return jp;
}

RVec lattice_coordinates(const CVec& v, const CMat& Z) {
  const auto g = Z.rows();
  const RMat Y = Z.imag();
  const RVec b = Y.llt().solve(RVec(v.imag()));
  const RVec a = v.real() - Z.real() * b;
  RVec out(2 * g);
  out << a, b;
  return out;
}

CVec reduce_mod_lattice(const CVec& v, const CMat& Z) {
  const auto g = Z.rows();
  RVec ab = lattice_coordinates(v, Z);
  for (Eigen::Index i = 0; i < ab.size(); ++i) ab(i) -= std::floor(ab(i));
  return ab.head(g).cast<cplx>() + Z * ab.tail(g).cast<cplx>();
}

double lattice_residual(const CVec& v, const CMat& Z) {
  const auto g = Z.rows();
  RVec ab = lattice_coordinates(v, Z);
  for (Eigen::Index i = 0; i < ab.size(); ++i) ab(i) = std::round(ab(i));
  const CVec nearest = ab.head(g).cast<cplx>() + Z * ab.tail(g).cast<cplx>();
  return (v - nearest).cwiseAbs().maxCoeff();
}

}  // namespace cyk
