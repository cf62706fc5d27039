#include "cyk/deform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "cyk/combinatorics.hpp"
#include "cyk/domain.hpp"
#include "cyk/error.hpp"

namespace cyk {

// ---- polynomials ---------------------------------------------------------

Poly Poly::constant(int nvars, const GaussRational& c) {
  return monomial(nvars, std::vector<int>(nvars, 0), c);
}

Poly Poly::monomial(int nvars, const std::vector<int>& exps, const GaussRational& c) {
  Poly p(nvars);
  p.add_term(exps, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

GaussRational Poly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? GaussRational{} : it->second;
}

void Poly::add_term(const std::vector<int>& exps, const GaussRational& c) {
  if (static_cast<int>(exps.size()) != nvars_) throw Error(ErrorCode::DimensionMismatch, "exponent length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::derivative(int var) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    --d[var];
    out.add_term(d, GaussRational(e[var]) * c);
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly operator*(const GaussRational& s, const Poly& p) {
  Poly out(p.nvars_);
  for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
  return out;
}

// ---- Beltrami fields and the bracket -------------------------------------

BeltramiField BeltramiField::zero(int g) {
  BeltramiField f;
  f.g = g;
  f.coeffs.assign(g, std::vector<Poly>(g, Poly(g)));
  return f;
}

BeltramiField BeltramiField::constant(const std::vector<std::vector<GaussRational>>& tau) {
  const int g = static_cast<int>(tau.size());
  BeltramiField f = zero(g);
  for (int i = 0; i < g; ++i) {
    if (static_cast<int>(tau[i].size()) != g) throw Error(ErrorCode::NonSquare, "tau must be g x g");
    for (int j = 0; j < g; ++j) f.coeffs[i][j] = Poly::constant(g, tau[i][j]);
  }
  return f;
}

bool BeltramiField::is_constant() const { return max_degree() <= 0; }

int BeltramiField::max_degree() const {
  int d = -1;
  for (const auto& row : coeffs)
    for (const auto& p : row) d = std::max(d, p.degree());
  return d;
}

Poly VectorValuedForm::component(int alpha, int beta, int nu) const {
  if (alpha == beta) return Poly(g);
  const bool flip = alpha > beta;
  auto it = comps.find({{std::min(alpha, beta), std::max(alpha, beta)}, nu});
  if (it == comps.end()) return Poly(g);
  return flip ? GaussRational(-1) * it->second : it->second;
}

VectorValuedForm bracket(const BeltramiField& phi1, const BeltramiField& phi2) {
  if (phi1.g != phi2.g) throw Error(ErrorCode::DimensionMismatch, "Beltrami fields of different dimension");
  const int g = phi1.g;
  auto T = [&](int alpha, int beta, int nu) {
    Poly t(g);
    for (int mu = 0; mu < g; ++mu) {
      t += phi1.coeffs[mu][alpha] * phi2.coeffs[nu][beta].derivative(mu);
      t -= phi2.coeffs[mu][beta] * phi1.coeffs[nu][alpha].derivative(mu);
    }
    return t;
  };
  VectorValuedForm out;
  out.g = g;
  for (int alpha = 0; alpha < g; ++alpha)
    for (int beta = alpha + 1; beta < g; ++beta)
      for (int nu = 0; nu < g; ++nu) {
        Poly c = T(alpha, beta, nu) - T(beta, alpha, nu);
        if (!c.is_zero()) out.comps[{{alpha, beta}, nu}] = std::move(c);
      }
  return out;
}

KuranishiResult kuranishi_series(const std::vector<BeltramiField>& basis, const std::vector<GaussRational>& tau,
                                 int order) {
  if (basis.size() != tau.size()) throw Error(ErrorCode::DimensionMismatch, "one coefficient per basis field");
  if (basis.empty()) throw Error(ErrorCode::InvalidArgument, "empty basis");
  const int g = basis.front().g;
  for (const auto& b : basis) {
    if (b.g != g) throw Error(ErrorCode::DimensionMismatch, "basis fields of different dimension");
    if (!b.is_constant()) throw Error(ErrorCode::NonConstantBasis, "only constant bases are supported");
  }
  KuranishiResult res;
  res.phi = BeltramiField::zero(g);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) res.phi.coeffs[i][j] += tau[k] * basis[k].coeffs[i][j];

  auto& cert = res.certificate;
  cert.order = order;
  cert.brackets_vanish = true;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      ++cert.pairs_checked;
      if (!bracket(basis[a], basis[b]).is_zero()) cert.brackets_vanish = false;
    }
  // dbar of a field with holomorphic coefficients is zero, so the residual
  // of dbar phi = 1/2 [phi, phi] is the bracket itself.
  cert.residual_zero = bracket(res.phi, res.phi).is_zero();
  return res;
}

// ---- forms and the potential ---------------------------------------------

cplx FormClass::coeff(const std::vector<int>& I, const std::vector<int>& J) const {
  auto it = coeffs.find({I, J});
  return it == coeffs.end() ? cplx{0.0, 0.0} : it->second;
}

FormClass omega_tau(const CMat& tau) {
  if (tau.rows() != tau.cols() || tau.rows() == 0) throw Error(ErrorCode::NonSquare, "tau must be square");
  const int g = static_cast<int>(tau.rows());
  FormClass w;
  w.g = g;
  for (int k = 0; k <= g; ++k)
    for (const auto& K : k_subsets(g, k)) {
      std::vector<int> I;
      for (int i = 0; i < g; ++i)
        if (!std::binary_search(K.begin(), K.end(), i)) I.push_back(i);
      const double sign = shuffle_sign(I, K);
      for (const auto& J : k_subsets(g, k)) {
        std::vector<std::vector<cplx>> sub(k, std::vector<cplx>(k));
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c) sub[r][c] = tau(K[r], J[c]);
        w.coeffs[{I, J}] = sign * leibniz_det(sub);
      }
    }
  return w;
}

std::vector<FormClass> hodge_components(const FormClass& w) {
  std::vector<FormClass> out(w.g + 1);
  for (auto& piece : out) piece.g = w.g;
  for (const auto& [key, c] : w.coeffs) out[key.second.size()].coeffs[key] = c;
  return out;
}

PotentialResult wp_potential(const CMat& tau) {
  if (!contains(tau, 0.0)) throw Error(ErrorCode::NotInDomain, "potential is only positive inside the domain");
  const int g = static_cast<int>(tau.rows());
  const FormClass w = omega_tau(tau);
  // Multi-index positions: dz^i -> i, dzbar^j -> g + j.
  std::vector<std::vector<int>> pos;
  std::vector<cplx> c;
  for (const auto& [key, val] : w.coeffs) {
    std::vector<int> p = key.first;
    for (int j : key.second) p.push_back(g + j);
    pos.push_back(p);
    c.push_back(val);
  }
  auto q = [g](int a, int b) { return a != b ? 0.0 : (a < g ? 1.0 : -1.0); };
  cplx sum{0.0, 0.0};
  for (std::size_t A = 0; A < pos.size(); ++A)
    for (std::size_t B = 0; B < pos.size(); ++B) {
      std::vector<std::vector<double>> sub(g, std::vector<double>(g));
      for (int r = 0; r < g; ++r)
        for (int s = 0; s < g; ++s) sub[r][s] = q(pos[A][r], pos[B][s]);
      const double d = leibniz_det(sub);
      if (d != 0.0) sum += c[A] * std::conj(c[B]) * d;
    }
  PotentialResult res;
  res.pairing_sum = sum.real();
  res.closed_form = (CMat::Identity(g, g) - tau * tau.adjoint()).determinant().real();
  res.value = res.closed_form;
  return res;
}

// ---- metric --------------------------------------------------------------

namespace {

using ld = long double;
using lcplx = std::complex<ld>;
using LMat = Eigen::Matrix<lcplx, Eigen::Dynamic, Eigen::Dynamic>;

void check_step(const CMat& tau, double margin) {
  if (!contains(tau, 0.0)) throw Error(ErrorCode::NotInDomain, "tau is outside the domain");
  Eigen::JacobiSVD<CMat> svd(tau);
  if (1.0 - svd.singularValues()(0) < margin) {
    throw Error(ErrorCode::StepTooLarge, "finite-difference stencil too close to the boundary");
  }
}

// -log det(I - tau tau^H) as a function of 2n real variables (Re, Im).
ld real_potential(const std::vector<ld>& v, int g) {
  const int n = g * g;
  LMat t(g, g);
  for (int a = 0; a < n; ++a) t(a / g, a % g) = lcplx(v[a], v[n + a]);
  const LMat m = LMat::Identity(g, g) - t * t.adjoint();
  Eigen::LLT<LMat> llt(m);
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::StepTooLarge, "stencil left the domain");
  ld s = 0;
  for (int i = 0; i < g; ++i) s += std::log(std::real(llt.matrixLLT()(i, i)));
  return -2 * s;
}

// Real Hessian by central differences with step h.
Eigen::Matrix<ld, Eigen::Dynamic, Eigen::Dynamic> real_hessian(const std::vector<ld>& x, int g, ld h) {
  const int m = 2 * g * g;
  Eigen::Matrix<ld, Eigen::Dynamic, Eigen::Dynamic> H(m, m);
  const ld f0 = real_potential(x, g);
  auto at = [&](int i, ld si, int j, ld sj) {
    std::vector<ld> y = x;
    y[i] += si;
    if (j >= 0) y[j] += sj;
    return real_potential(y, g);
  };
  for (int i = 0; i < m; ++i) {
    H(i, i) = (at(i, h, -1, 0) - 2 * f0 + at(i, -h, -1, 0)) / (h * h);
    for (int j = i + 1; j < m; ++j) {
      H(i, j) = (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) / (4 * h * h);
      H(j, i) = H(i, j);
    }
  }
  return H;
}

// Polarized potential F(w) = -log det(I - tau sigma^t), w = (tau, sigma) flattened.
struct Polarized {
  int g;
  int n;
  lcplx operator()(const std::vector<lcplx>& w) const {
    LMat t(g, g), s(g, g);
    for (int a = 0; a < n; ++a) {
      t(a / g, a % g) = w[a];
      s(a / g, a % g) = w[n + a];
    }
    const LMat m = LMat::Identity(g, g) - t * s.transpose();
    return -std::log(Eigen::PartialPivLU<LMat>(m).determinant());
  }
};

// Mixed partial along the listed variables: product of central differences,
// then one Richardson step.
lcplx mixed(const Polarized& F, const std::vector<lcplx>& w0, const std::vector<int>& vars, ld h) {
  auto D = [&](ld step) {
    const int k = static_cast<int>(vars.size());
    lcplx acc{0, 0};
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<lcplx> w = w0;
      int neg = 0;
      for (int r = 0; r < k; ++r) {
        const bool minus = (mask >> r) & 1;
        w[vars[r]] += minus ? -step : step;
        neg += minus;
      }
      acc += (neg % 2 == 0 ? ld(1) : ld(-1)) * F(w);
    }
    return acc / std::pow(2 * step, static_cast<ld>(k));
  };
  return (ld(4) * D(h / 2) - D(h)) / ld(3);
}

constexpr ld kCurvatureStep = 1e-2L;

struct CurvatureData {
  int n = 0;
  CMat G, Ginv;
  std::vector<cplx> F3h;  // F_{a c qbar} at (a n + c) n + q
  std::vector<cplx> F3a;  // F_{p bbar dbar} at (p n + b) n + d
  std::vector<cplx> R;
};

CurvatureData curvature_data(const CMat& tau) {
  const int g = static_cast<int>(tau.rows());
  const int n = g * g;
  const Polarized F{g, n};
  std::vector<lcplx> w0(2 * n);
  for (int a = 0; a < n; ++a) {
    const cplx t = tau(a / g, a % g);
    w0[a] = lcplx(t.real(), t.imag());
    w0[n + a] = std::conj(w0[a]);
  }
  const ld h = kCurvatureStep;
  auto to_c = [](lcplx z) { return cplx(static_cast<double>(z.real()), static_cast<double>(z.imag())); };

  CurvatureData d;
  d.n = n;
  d.G = CMat(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d.G(a, b) = to_c(mixed(F, w0, {a, n + b}, h));
  d.Ginv = d.G.inverse();

  const int n3 = n * n * n;
  d.F3h.assign(n3, {});
  d.F3a.assign(n3, {});
#pragma omp parallel for schedule(static)
  for (int idx = 0; idx < n3; ++idx) {
    const int x = idx / (n * n), y = (idx / n) % n, z = idx % n;
    d.F3h[idx] = to_c(mixed(F, w0, {x, y, n + z}, h));
    d.F3a[idx] = to_c(mixed(F, w0, {x, n + y, n + z}, h));
  }

  const int n4 = n3 * n;
  std::vector<cplx> F4(n4);
#pragma omp parallel for schedule(static)
  for (int idx = 0; idx < n4; ++idx) {
    const int a = idx / n3, b = (idx / (n * n)) % n, c = (idx / n) % n, e = idx % n;
    if (a > c || b > e) continue;  // filled by symmetry below
    F4[idx] = to_c(mixed(F, w0, {a, n + b, c, n + e}, h));
  }
  auto at4 = [n](int a, int b, int c, int e) { return ((a * n + b) * n + c) * n + e; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e)
          F4[at4(a, b, c, e)] = F4[at4(std::min(a, c), std::min(b, e), std::max(a, c), std::max(b, e))];

  d.R.assign(n4, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          cplx s = -F4[at4(a, b, c, e)];
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              s += d.Ginv(q, p) * d.F3h[(a * n + c) * n + q] * d.F3a[(p * n + b) * n + e];
          d.R[at4(a, b, c, e)] = s;
        }
  return d;
}

void check_curvature_region(const CMat& tau) {
  if (tau.rows() != tau.cols() || tau.rows() == 0) throw Error(ErrorCode::NonSquare, "tau must be square");
  if (!contains(tau, 0.0)) throw Error(ErrorCode::NotInDomain, "tau is outside the domain");
  Eigen::JacobiSVD<CMat> svd(tau);
  if (svd.singularValues()(0) > 0.5 + 1e-12) {
    throw Error(ErrorCode::StepTooLarge, "curvature checks are restricted to |tau| <= 0.5");
  }
}

}  // namespace

CMat wp_metric(const CMat& tau) {
  if (tau.rows() != tau.cols() || tau.rows() == 0) throw Error(ErrorCode::NonSquare, "tau must be square");
  constexpr ld h = 1e-4L;
  check_step(tau, 500.0 * static_cast<double>(h));
  const int g = static_cast<int>(tau.rows());
  const int n = g * g;
  std::vector<ld> x(2 * n);
  for (int a = 0; a < n; ++a) {
    x[a] = tau(a / g, a % g).real();
    x[n + a] = tau(a / g, a % g).imag();
  }
  const auto H = ((4 * real_hessian(x, g, h / 2) - real_hessian(x, g, h)) / 3).eval();
  CMat G(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ld re = (H(a, b) + H(n + a, n + b)) / 4;
      const ld im = (H(a, n + b) - H(n + a, b)) / 4;
      G(a, b) = cplx(static_cast<double>(re), static_cast<double>(im));
    }
  return G;
}

double CurvatureTensor::holomorphic_sectional(const CVec& u) const {
  cplx num{0.0, 0.0};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) num += (*this)(a, b, c, d) * u(a) * std::conj(u(b)) * u(c) * std::conj(u(d));
  const cplx den = u.transpose() * metric * u.conjugate();
  return (num / (den * den)).real();
}

CurvatureTensor wp_curvature(const CMat& tau) {
  check_curvature_region(tau);
  CurvatureData d = curvature_data(tau);
  CurvatureTensor t;
  t.n = d.n;
  t.metric = d.G;
  t.data = std::move(d.R);
  return t;
}

double nabla_R_check(const CMat& tau, const CMat& direction) {
  check_curvature_region(tau);
  if (direction.rows() != tau.rows() || direction.cols() != tau.cols())
    throw Error(ErrorCode::DimensionMismatch, "direction must match tau");
  const double norm = direction.norm();
  if (norm == 0.0) throw Error(ErrorCode::InvalidArgument, "direction must be nonzero");
  const CMat dir = direction / norm;
  const int g = static_cast<int>(tau.rows());
  const int n = g * g;

  const CurvatureData c0 = curvature_data(tau);
  constexpr double hs = 1e-2;
  auto D = [&](double s) {
    const auto plus = curvature_data(tau + s * dir).R;
    const auto minus = curvature_data(tau - s * dir).R;
    std::vector<cplx> out(plus.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (plus[i] - minus[i]) / (2.0 * s);
    return out;
  };
  const auto d1 = D(hs);
  const auto d2 = D(hs / 2);

  CVec u(n);
  for (int a = 0; a < n; ++a) u(a) = dir(a / g, a % g);
  CMat Gam = CMat::Zero(n, n);   // Gam(p, a)
  CMat GamB = CMat::Zero(n, n);  // GamB(q, b)
  for (int e = 0; e < n; ++e)
    for (int a = 0; a < n; ++a)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          Gam(p, a) += u(e) * c0.Ginv(q, p) * c0.F3h[(e * n + a) * n + q];
          GamB(q, a) += std::conj(u(e)) * c0.Ginv(q, p) * c0.F3a[(p * n + a) * n + e];
        }
  auto R = [&](int a, int b, int c, int e) { return c0.R[((a * n + b) * n + c) * n + e]; };
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          const int idx = ((a * n + b) * n + c) * n + e;
          cplx v = (4.0 * d2[idx] - d1[idx]) / 3.0;
          for (int p = 0; p < n; ++p) {
            v -= Gam(p, a) * R(p, b, c, e) + Gam(p, c) * R(a, b, p, e);
            v -= GamB(p, b) * R(a, p, c, e) + GamB(p, e) * R(a, b, c, p);
          }
          worst = std::max(worst, std::abs(v));
        }
  return worst;
}

// ---- Taylor check --------------------------------------------------------

namespace {

// Multisets of the given degree over nv variables, as nondecreasing index lists.
std::vector<std::vector<int>> monomials(int nv, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == degree) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < nv; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

CMat random_tau(int g, double radius, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  std::uniform_real_distribution<double> U(0.2, 1.0);
  CMat t(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) t(i, j) = cplx(N(rng), N(rng));
  Eigen::JacobiSVD<CMat> svd(t);
  return t * (radius * U(rng) / svd.singularValues()(0));
}

struct Fit {
  std::vector<std::vector<int>> monos;
  std::vector<int> degree;
  CMat coeffs;  // monomial x metric entry
  std::size_t samples = 0;
};

Fit fit_metric(int g, const std::vector<int>& degrees, double radius, bool even, std::mt19937_64& rng) {
  const int n = g * g;
  Fit fit;
  for (int d : degrees)
    for (auto& m : monomials(2 * n, d)) {
      fit.monos.push_back(m);
      fit.degree.push_back(d);
    }
  const auto unknowns = static_cast<Eigen::Index>(fit.monos.size());
  const Eigen::Index samples = 2 * unknowns + 16;
  CMat A(samples, unknowns), B(samples, n * n);
  for (Eigen::Index s = 0; s < samples; ++s) {
    const CMat tau = random_tau(g, radius, rng);
    const CMat gp = wp_metric(tau);
    const CMat gm = wp_metric(CMat(-tau));
    const CMat part = even ? CMat((gp + gm) / 2.0) : CMat((gp - gm) / 2.0);
    std::vector<cplx> vars(2 * n);
    for (int a = 0; a < n; ++a) {
      vars[a] = tau(a / g, a % g);
      vars[n + a] = std::conj(vars[a]);
    }
    for (Eigen::Index k = 0; k < unknowns; ++k) {
      cplx m{1.0, 0.0};
      for (int v : fit.monos[k]) m *= vars[v];
      A(s, k) = m;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) B(s, a * n + b) = part(a, b);
  }
  fit.coeffs = A.colPivHouseholderQr().solve(B);
  fit.samples = static_cast<std::size_t>(samples);
  return fit;
}

}  // namespace

TaylorReport metric_taylor_check(int g, std::uint64_t seed, int order) {
  if (g < 1 || g > 2) throw Error(ErrorCode::InvalidArgument, "Taylor check supports g = 1, 2");
  if (order != 3) throw Error(ErrorCode::InvalidArgument, "only order 3 is implemented");
  const int n = g * g;
  std::mt19937_64 rng(seed);
  TaylorReport rep;
  rep.g = g;
  rep.metric_at_zero_defect = max_abs(CMat(wp_metric(CMat::Zero(g, g)) - CMat::Identity(n, n)));

  const Fit odd = fit_metric(g, {1, 3}, 0.3, false, rng);
  for (std::size_t k = 0; k < odd.monos.size(); ++k) {
    const double m = odd.coeffs.row(static_cast<Eigen::Index>(k)).cwiseAbs().maxCoeff();
    (odd.degree[k] == 1 ? rep.first_order_max : rep.third_order_max) =
        std::max(odd.degree[k] == 1 ? rep.first_order_max : rep.third_order_max, m);
  }

  const Fit ev = fit_metric(g, {0, 2, 4}, 0.05, true, rng);
  const CurvatureTensor R0 = wp_curvature(CMat::Zero(g, g));
  for (std::size_t k = 0; k < ev.monos.size(); ++k) {
    const auto row = ev.coeffs.row(static_cast<Eigen::Index>(k));
    if (ev.degree[k] == 0) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          rep.degree0_defect = std::max(rep.degree0_defect, std::abs(row(a * n + b) - (a == b ? 1.0 : 0.0)));
    } else if (ev.degree[k] == 2) {
      const int v0 = ev.monos[k][0], v1 = ev.monos[k][1];
      // only tau_c conj(tau_d) monomials should survive; they match -R
      const bool mixed_type = v0 < n && v1 >= n;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const cplx expect = mixed_type ? -R0(a, b, v0, v1 - n) : cplx{0.0, 0.0};
          rep.quadratic_vs_curvature = std::max(rep.quadratic_vs_curvature, std::abs(row(a * n + b) - expect));
        }
    }
  }
  rep.samples = odd.samples + ev.samples;
  rep.ok = rep.metric_at_zero_defect < 1e-8 && rep.third_order_max < 1e-7 && rep.first_order_max < 1e-7 &&
           rep.quadratic_vs_curvature < 1e-4;
  return rep;
}

}  // namespace cyk
