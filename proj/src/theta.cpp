#include "cyk/theta.hpp"

#include <cmath>
#include <functional>

#include <boost/math/special_functions/gamma.hpp>

#include "cyk/error.hpp"

namespace cyk {

namespace {

RMat checked_imag(const CMat& Z) {
  if (Z.rows() != Z.cols() || Z.rows() == 0) throw Error(ErrorCode::NonSquare, "Z must be square");
  const RMat Y = (Z.imag() + Z.imag().transpose()) / 2.0;
  if (Y.llt().info() != Eigen::Success || min_eig_symmetric(Y) <= 0.0) {
    throw Error(ErrorCode::NotPositiveDefinite, "Im Z must be positive definite");
  }
  return Y;
}

// Points x = m + shift with (x)^t A (x) <= r2, A = U^t U, enumerated
// coordinate by coordinate from the last one.
void enumerate(const RMat& U, const RVec& shift, double r2, std::vector<double>& out) {
  const int g = static_cast<int>(U.rows());
  std::vector<double> x(g);
  std::vector<long long> m(g);
  std::function<void(int, double)> rec = [&](int i, double budget) {
    double s = 0.0;
    for (int j = i + 1; j < g; ++j) s += U(i, j) / U(i, i) * x[j];
    // x_i + s = m_i + shift_i + s, need U_ii^2 (.)^2 <= budget
    const double half = std::sqrt(std::max(budget, 0.0)) / U(i, i);
    const double centre = -shift(i) - s;
    const auto lo = static_cast<long long>(std::ceil(centre - half));
    const auto hi = static_cast<long long>(std::floor(centre + half));
    for (long long mi = lo; mi <= hi; ++mi) {
      m[i] = mi;
      x[i] = static_cast<double>(mi) + shift(i);
      const double t = U(i, i) * (x[i] + s);
      const double rest = budget - t * t;
      if (rest < 0.0) continue;
      if (i == 0) {
        for (int k = 0; k < g; ++k) out.push_back(x[k]);
      } else {
        rec(i - 1, rest);
      }
    }
  };
  rec(g - 1, r2);
}

RMat upper_factor(const RMat& A) {
  Eigen::LLT<RMat> llt(A);
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::NotPositiveDefinite, "Cholesky failed");
  return llt.matrixU();
}

// Shortest nonzero vector length of the lattice with Gram matrix A.
double shortest_vector(const RMat& A) {
  const RMat U = upper_factor(A);
  const double r2 = A.diagonal().minCoeff() * (1.0 + 1e-12);
  std::vector<double> pts;
  enumerate(U, RVec::Zero(A.rows()), r2, pts);
  const int g = static_cast<int>(A.rows());
  double best = std::sqrt(A.diagonal().minCoeff());
  for (std::size_t k = 0; k * g < pts.size(); ++k) {
    RVec v = Eigen::Map<const RVec>(&pts[k * g], g);
    if (v.cwiseAbs().maxCoeff() == 0.0) continue;
    best = std::min(best, std::sqrt(v.dot(A * v)));
  }
  return best;
}

}  // namespace

int ThetaCharacteristic::parity() const {
  int s = 0;
  for (std::size_t i = 0; i < delta.size(); ++i) s += delta[i] * epsilon[i];
  return s % 2;
}

ThetaCharacteristic zero_characteristic(int g) {
  return {std::vector<int>(g, 0), std::vector<int>(g, 0)};
}

std::vector<ThetaCharacteristic> all_characteristics(int g) {
  std::vector<ThetaCharacteristic> out;
  for (int d = 0; d < (1 << g); ++d)
    for (int e = 0; e < (1 << g); ++e) {
      ThetaCharacteristic ch = zero_characteristic(g);
      for (int i = 0; i < g; ++i) {
        ch.delta[i] = (d >> (g - 1 - i)) & 1;
        ch.epsilon[i] = (e >> (g - 1 - i)) & 1;
      }
      out.push_back(ch);
    }
  return out;
}

ThetaCharacteristic parse_characteristic(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::MalformedInput, "characteristic must look like 01,10");
  const std::string d = text.substr(0, comma);
  const std::string e = text.substr(comma + 1);
  if (d.size() != e.size() || d.empty()) throw Error(ErrorCode::MalformedInput, "characteristic halves differ in length");
  ThetaCharacteristic ch;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if ((d[i] != '0' && d[i] != '1') || (e[i] != '0' && e[i] != '1'))
      throw Error(ErrorCode::MalformedInput, "characteristic bits must be 0 or 1");
    ch.delta.push_back(d[i] - '0');
    ch.epsilon.push_back(e[i] - '0');
  }
  return ch;
}

double theta_radius(const RMat& Y, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const double g = static_cast<double>(Y.rows());
  const double rho = shortest_vector(kPi * Y);
  auto bound = [&](double R) {
    const double x = (R - rho / 2.0) * (R - rho / 2.0);
    return g / 2.0 * std::pow(2.0 / rho, g) * boost::math::tgamma(g / 2.0, x);
  };
  double R = (std::sqrt(g) + rho) / 2.0;
  while (bound(R) > tol) R *= 1.05;
  return R;
}

kernels::ThetaLattice theta_lattice(const RMat& Y, const RVec& c, const std::vector<int>& delta, double radius) {
  const int g = static_cast<int>(Y.rows());
  RVec shift(g);
  for (int i = 0; i < g; ++i) shift(i) = 0.5 * delta[i] + c(i);
  std::vector<double> xs;
  enumerate(upper_factor(kPi * Y), shift, radius * radius, xs);
  // stored points are n = m + delta/2, i.e. x - c
  kernels::ThetaLattice lat;
  lat.g = g;
  lat.points = std::move(xs);
  for (std::size_t k = 0; k < lat.points.size(); ++k) lat.points[k] -= c(static_cast<Eigen::Index>(k % g));
  return lat;
}

ThetaResult theta(const ThetaCharacteristic& ch, const CVec& z, const CMat& Z, double tol, const ThetaOptions& opt) {
  const RMat Y = checked_imag(Z);
  const int g = static_cast<int>(Z.rows());
  if (ch.genus() != g || z.size() != g) throw Error(ErrorCode::DimensionMismatch, "characteristic, z and Z disagree");
  const RVec c = Y.llt().solve(RVec(z.imag()));
  ThetaResult res;
  res.radius = theta_radius(Y, tol) * opt.radius_scale;
  const kernels::ThetaLattice lat = theta_lattice(Y, c, ch.delta, res.radius);
  res.terms = lat.size();
  CVec w = z;
  for (int i = 0; i < g; ++i) w(i) += 0.5 * ch.epsilon[i];
  res.value = opt.parallel ? kernels::theta_sum_omp(lat, Z, w) : kernels::theta_sum_serial(lat, Z, w);
  return res;
}

std::vector<CVec> divisor_translates(const HyperellipticCurve& curve, const PeriodMatrix& periods,
                                     const AbelOptions& opt) {
  std::vector<CVec> out;
  for (cplx lam : curve.branch_points) out.push_back(abel_jacobi(curve, periods, {{lam, 1, false}}, infinity_point(), opt).vector);
  out.push_back(CVec::Zero(curve.genus));
  return out;
}

CVec riemann_constant(const std::vector<CVec>& translates, int g) {
  if (static_cast<int>(translates.size()) != 2 * g + 2) throw Error(ErrorCode::DimensionMismatch, "need 2g+2 translates");
  CVec k = CVec::Zero(g);
  for (int j = 1; j <= g; ++j) k += translates[2 * j - 1];
  return k;
}

DivisorTest is_on_divisor(const CVec& z, int i, const std::vector<CVec>& translates, const CMat& Z, double tol,
                          DivisorMode mode) {
  const int g = static_cast<int>(Z.rows());
  if (i < 1 || i > 2 * g + 2) throw Error(ErrorCode::InvalidArgument, "divisor index must lie in 1..2g+2");
  CVec shifted = z + translates.at(i - 1);
  if (mode == DivisorMode::AbelImage) shifted += riemann_constant(translates, g);
  const ThetaCharacteristic ch = zero_characteristic(g);
  const double eval_tol = std::max(1e-16, tol * 1e-3);
  DivisorTest out;
  out.value = theta(ch, shifted, Z, eval_tol).value;
  // Local scale: largest |theta| on a small sphere around the shifted point.
  constexpr double kRadius = 0.05;
  for (int k = 0; k < g; ++k)
    for (cplx d : {cplx(kRadius, 0.0), cplx(-kRadius, 0.0), cplx(0.0, kRadius), cplx(0.0, -kRadius)}) {
      CVec p = shifted;
      p(k) += d;
      out.scale = std::max(out.scale, std::abs(theta(ch, p, Z, eval_tol).value));
    }
  out.on_divisor = std::abs(out.value) <= tol * out.scale;
  return out;
}

DivisorTest is_on_divisor(const CVec& z, int i, const HyperellipticCurve& curve, const PeriodMatrix& periods,
                          double tol, DivisorMode mode) {
  return is_on_divisor(z, i, divisor_translates(curve, periods), periods.Z, tol, mode);
}

}  // namespace cyk
