#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyk/linalg.hpp"
#include "cyk/quadrature.hpp"

namespace cyk {

// y^2 = prod (z - lambda_k) over 2g+1 finite branch points; infinity is the
// last branch point. Points are kept sorted by (real, imag).
struct HyperellipticCurve {
  int genus = 0;
  std::vector<cplx> branch_points;

  bool real_ordered() const;
  double min_gap() const;
  double scale() const;  // max(1, max |lambda|)
  cplx polynomial(cplx z) const;
};

HyperellipticCurve new_curve(std::vector<cplx> branch_points);

// omega_k = z^power dz / y, power = k - 1.
struct Differential {
  int power = 0;
};
std::vector<Differential> holomorphic_basis(const HyperellipticCurve& curve);

// i * prod sqrt(lambda_k - z), principal roots. On a cut the value from the
// upper side is returned.
cplx canonical_y(const HyperellipticCurve& curve, cplx z);

// A cycle as an integer combination of the chain lifts c_1..c_2g. The lift
// c_k runs from lambda_k to lambda_{k+1} on one sheet and back on the other,
// so it crosses only the cuts meeting that segment's endpoints.
struct Contour {
  std::vector<int> chain;
  std::vector<std::pair<int, int>> crossings() const;  // (k, k+1), zero based
};

struct CycleBasis {
  int genus = 0;
  std::vector<Contour> a_cycles;
  std::vector<Contour> b_cycles;
};

// Integer intersection numbers of the chain lifts: <c_k, c_{k+1}> = 1.
IMat chain_intersection(int n_chains);
CycleBasis build_cycles(const HyperellipticCurve& curve);
// 2g x 2g matrix of <gamma_i, gamma_j> with gamma = (A_1..A_g, B_1..B_g).
IMat intersection_matrix(const CycleBasis& cycles);

struct PeriodResiduals {
  double symmetry = 0.0;         // max |Z - Z^t|
  double min_eig_im = 0.0;       // smallest eigenvalue of Im Z
  double quadrature_error = 0.0; // largest per-entry estimate
};

struct PeriodMatrix {
  CMat raw;            // g x 2g, rows omega_j, columns A_1..A_g, B_1..B_g
  CMat Z;              // g x g
  PeriodResiduals residuals;
  CMat chain_periods;  // g x 2g, columns c_1..c_2g
};

struct PeriodOptions {
  int nodes = 24;
  bool parallel = true;
};

PeriodMatrix period_matrix(const HyperellipticCurve& curve, const CycleBasis& cycles, double tol,
                           const PeriodOptions& opt = {});

struct NormalizedPeriods {
  CMat Z;
  PeriodResiduals residuals;
};
NormalizedPeriods normalize_periods(const CMat& raw);

// A point of the curve: y = sheet * canonical_y(z). Branch points ignore the sheet.
struct CurvePoint {
  cplx z{0.0, 0.0};
  int sheet = 1;
  bool infinity = false;
};
inline CurvePoint infinity_point() { return {cplx{0.0, 0.0}, 1, true}; }

// Validates y^2 = F(z) to relative tolerance tol and reads off the sheet.
CurvePoint point_from_xy(const HyperellipticCurve& curve, cplx z, cplx y, double tol);

struct AbelOptions {
  double tol = 1e-12;
  int nodes = 24;
  bool parallel = true;
};

// Unnormalized integral of (omega_1..omega_g) from infinity to p.
CVec abel_integral(const HyperellipticCurve& curve, const CurvePoint& p, const AbelOptions& opt = {});

struct JacobianPoint {
  CVec vector;   // normalized, unreduced
  CVec reduced;  // lattice coordinates in [0, 1)
  CMat Z;
};

JacobianPoint abel_jacobi(const HyperellipticCurve& curve, const PeriodMatrix& periods,
                          const std::vector<CurvePoint>& points, const CurvePoint& base = infinity_point(),
                          const AbelOptions& opt = {});

// v = a + Z b with real a, b. Returns (a, b) stacked.
RVec lattice_coordinates(const CVec& v, const CMat& Z);
CVec reduce_mod_lattice(const CVec& v, const CMat& Z);
// max-norm distance from v to the nearest lattice point n + Z m.
double lattice_residual(const CVec& v, const CMat& Z);

}  // namespace cyk
