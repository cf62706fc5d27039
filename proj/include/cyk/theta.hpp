#pragma once

#include <string>
#include <vector>

#include "cyk/curve.hpp"
#include "cyk/linalg.hpp"
#include "cyk/parallel/kernels.hpp"

namespace cyk {

struct ThetaCharacteristic {
  std::vector<int> delta;    // entries in {0, 1}
  std::vector<int> epsilon;  // entries in {0, 1}

  int genus() const { return static_cast<int>(delta.size()); }
  int parity() const;  // delta . epsilon mod 2
};

ThetaCharacteristic zero_characteristic(int g);
// All 2^{2g} characteristics, delta bits major.
std::vector<ThetaCharacteristic> all_characteristics(int g);
// "01,10" -> delta = (0,1), epsilon = (1,0).
ThetaCharacteristic parse_characteristic(const std::string& text);

struct ThetaOptions {
  bool parallel = true;
  double radius_scale = 1.0;  // multiplies the radius chosen from the tail bound
};

struct ThetaResult {
  cplx value{0.0, 0.0};
  double radius = 0.0;
  std::size_t terms = 0;
};

// theta[delta, epsilon](z, Z) = sum_m exp(pi i n^t Z n + 2 pi i n^t (z + epsilon/2)),
// n = m + delta/2. The truncation error is at most tol times the envelope
// exp(pi c^t Y c), c = Y^{-1} Im z, Y = Im Z.
ThetaResult theta(const ThetaCharacteristic& ch, const CVec& z, const CMat& Z, double tol,
                  const ThetaOptions& opt = {});

// Radius R of the ellipsoid pi (n + c)^t Y (n + c) <= R^2 meeting tol.
double theta_radius(const RMat& Y, double tol);
// Lattice points n = m + delta/2 inside that ellipsoid.
kernels::ThetaLattice theta_lattice(const RMat& Y, const RVec& c, const std::vector<int>& delta, double radius);

// t_1..t_{2g+1} = AJ(lambda_i), t_{2g+2} = 0 (the point at infinity).
std::vector<CVec> divisor_translates(const HyperellipticCurve& curve, const PeriodMatrix& periods,
                                     const AbelOptions& opt = {});

// Half-period sum_{k=1..g} t_{2k}: the Riemann constant for base point
// infinity with the cycle basis of build_cycles.
CVec riemann_constant(const std::vector<CVec>& translates, int g);

enum class DivisorMode {
  Translate,  // |theta(z + t_i)|
  AbelImage,  // |theta(z + t_i + kappa)|, so AJ(D + lambda_i) with deg D = g-1 is on the divisor
};

struct DivisorTest {
  bool on_divisor = false;
  cplx value{0.0, 0.0};
  double scale = 0.0;
};

// i is one based, 1..2g+2.
DivisorTest is_on_divisor(const CVec& z, int i, const std::vector<CVec>& translates, const CMat& Z, double tol,
                          DivisorMode mode = DivisorMode::Translate);
DivisorTest is_on_divisor(const CVec& z, int i, const HyperellipticCurve& curve, const PeriodMatrix& periods,
                          double tol, DivisorMode mode = DivisorMode::Translate);

}  // namespace cyk
