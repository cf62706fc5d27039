#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cyk/linalg.hpp"
#include "cyk/rational.hpp"

namespace cyk {

// Polynomial in z^1..z^g with Gaussian-rational coefficients; keys are
// exponent vectors, zero coefficients are never stored.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, const GaussRational& c);
  static Poly monomial(int nvars, const std::vector<int>& exps, const GaussRational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const std::map<std::vector<int>, GaussRational>& terms() const { return terms_; }
  GaussRational coeff(const std::vector<int>& exps) const;

  void add_term(const std::vector<int>& exps, const GaussRational& c);
  Poly derivative(int var) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const GaussRational& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  int nvars_;
  std::map<std::vector<int>, GaussRational> terms_;
};

// a^i_{jbar}: coeffs[i][j] multiplies dzbar^j (x) d/dz^i.
struct BeltramiField {
  int g = 0;
  std::vector<std::vector<Poly>> coeffs;

  static BeltramiField zero(int g);
  // Constant field from a g x g matrix tau, tau[i][j] = a^i_j.
  static BeltramiField constant(const std::vector<std::vector<GaussRational>>& tau);
  bool is_constant() const;
  int max_degree() const;
};

// (0,2)-form with values in T^{1,0}: key ((alpha, beta), nu) with alpha < beta.
struct VectorValuedForm {
  int g = 0;
  std::map<std::pair<std::pair<int, int>, int>, Poly> comps;

  bool is_zero() const { return comps.empty(); }
  Poly component(int alpha, int beta, int nu) const;  // antisymmetric in (alpha, beta)
};

// [phi1, phi2]^nu_{alpha beta} = T(alpha, beta) - T(beta, alpha) with
// T(alpha, beta) = sum_mu (phi1^mu_alpha d_mu phi2^nu_beta - phi2^mu_beta d_mu phi1^nu_alpha).
// Symmetric in (phi1, phi2).
VectorValuedForm bracket(const BeltramiField& phi1, const BeltramiField& phi2);

struct KuranishiCertificate {
  int order = 1;
  std::size_t pairs_checked = 0;
  bool brackets_vanish = false;  // every [phi_i, phi_j] is exactly zero
  bool residual_zero = false;    // dbar phi - 1/2 [phi, phi] == 0 exactly
};

struct KuranishiResult {
  BeltramiField phi;
  KuranishiCertificate certificate;
};

// phi(tau) = sum tau^i phi_i; higher terms vanish because all brackets do.
KuranishiResult kuranishi_series(const std::vector<BeltramiField>& basis, const std::vector<GaussRational>& tau,
                                 int order = 2);

// Sum of c_{I,J} dz^I ^ dzbar^J with |I| + |J| = g; indices zero based, increasing.
struct FormClass {
  int g = 0;
  std::map<std::pair<std::vector<int>, std::vector<int>>, cplx> coeffs;

  cplx coeff(const std::vector<int>& I, const std::vector<int>& J) const;
};

// Expansion of the wedge of theta^i = dz^i + sum_j tau^i_j dzbar^j; the
// coefficient of dz^I ^ dzbar^J is shuffle_sign(I, K) det tau[K, J], K = complement of I.
FormClass omega_tau(const CMat& tau);
// Pieces of type (g-k, k), k = 0..g.
std::vector<FormClass> hodge_components(const FormClass& w);

struct PotentialResult {
  double pairing_sum = 0.0;  // sum c_A conj(c_B) det q[A, B], q = diag(I, -I)
  double closed_form = 0.0;  // det(I - tau tau^H)
  double value = 0.0;
};
PotentialResult wp_potential(const CMat& tau);

// Coordinate index a = i g + j for tau^i_j.
// g_{a bbar} of -log det(I - tau tau^H): real central differences, step 1e-4,
// one Richardson step. Throws StepTooLarge within 0.05 of the boundary.
CMat wp_metric(const CMat& tau);

struct CurvatureTensor {
  int n = 0;                // g^2
  CMat metric;              // n x n
  std::vector<cplx> data;   // R_{a bbar c dbar} at ((a n + b) n + c) n + d

  cplx operator()(int a, int b, int c, int d) const { return data[((a * n + b) * n + c) * n + d]; }
  // R(u, ubar, u, ubar) / g(u, ubar)^2
  double holomorphic_sectional(const CVec& u) const;
};

// Curvature of the metric, from holomorphic finite differences of the
// polarized potential -log det(I - tau sigma^t). Needs |tau| <= 0.5.
CurvatureTensor wp_curvature(const CMat& tau);

// max |(nabla_U R)_{a bbar c dbar}| along the real direction U = u + ubar.
double nabla_R_check(const CMat& tau, const CMat& direction);

struct TaylorReport {
  int g = 0;
  std::size_t samples = 0;
  double metric_at_zero_defect = 0.0;  // max |G(0) - I|
  double degree0_defect = 0.0;         // fitted constant term vs identity
  double first_order_max = 0.0;
  double third_order_max = 0.0;
  double quadratic_vs_curvature = 0.0;  // max |quadratic coefficient + R(0)|
  bool ok = false;
};

// Least-squares fit of the metric around 0: odd part (degrees 1, 3) from
// samples at radius 0.3, even part (degrees 0, 2, 4) at radius 0.05.
TaylorReport metric_taylor_check(int g, std::uint64_t seed = 1, int order = 3);

}  // namespace cyk
