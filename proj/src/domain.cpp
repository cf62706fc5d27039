#include "cyk/domain.hpp"

#include <cmath>

#include "cyk/combinatorics.hpp"
#include "cyk/error.hpp"

namespace cyk {

namespace {

void require_square(const CMat& Z) {
  if (Z.rows() != Z.cols() || Z.rows() == 0) throw Error(ErrorCode::NonSquare, "matrix must be square");
}

void require_inside(const CMat& Z) {
  require_square(Z);
  if (!contains(Z, 0.0)) throw Error(ErrorCode::NotInDomain, "I - Z Z^H is not positive definite");
}

RVec realify(const CVec& v) {
  RVec r(2 * v.size());
  r << v.real(), v.imag();
  return r;
}

CMat hstack(const std::vector<CMat>& blocks, Eigen::Index rows) {
  Eigen::Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  CMat out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

cplx minus_i_power(int k) {
  static const cplx table[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  return table[((k % 4) + 4) % 4];
}

}  // namespace

bool contains(const CMat& Z, double tol) {
  require_square(Z);
  const auto g = Z.rows();
  return min_eig_hermitian(CMat::Identity(g, g) - Z * Z.adjoint()) > tol;
}

CMat signature_form(int g) {
  CMat h = CMat::Identity(2 * g, 2 * g);
  h.bottomRightCorner(g, g) *= -1.0;
  return h;
}

bool su_check(const CMat& M, double tol) {
  if (M.rows() != M.cols() || M.rows() == 0 || M.rows() % 2 != 0) return false;
  const int g = static_cast<int>(M.rows() / 2);
  const CMat H = signature_form(g);
  return max_abs(CMat(M.adjoint() * H * M - H)) <= tol && std::abs(M.determinant() - 1.0) <= tol;
}

CMat act(const CMat& M, const CMat& Z) {
  require_square(Z);
  const auto g = Z.rows();
  if (M.rows() != 2 * g || M.cols() != 2 * g) throw Error(ErrorCode::DimensionMismatch, "M must be 2g x 2g");
  const CMat num = M.topLeftCorner(g, g) * Z + M.topRightCorner(g, g);
  const CMat den = M.bottomLeftCorner(g, g) * Z + M.bottomRightCorner(g, g);
  Eigen::FullPivLU<CMat> lu(den);
  if (!lu.isInvertible() || std::abs(lu.determinant()) < 1e-300) {
    throw Error(ErrorCode::SingularDenominator, "C Z + D is singular");
  }
  // X (CZ + D) = AZ + B
  return den.transpose().fullPivLu().solve(num.transpose()).transpose();
}

CMat transitive_witness(const CMat& Z) {
  require_inside(Z);
  const auto g = Z.rows();
  const CMat I = CMat::Identity(g, g);
  const CMat P = hermitian_power(I - Z * Z.adjoint(), -0.5);
  const CMat Q = hermitian_power(I - Z.adjoint() * Z, -0.5);
  CMat M(2 * g, 2 * g);
  M << P, Z * Q, Z.adjoint() * P, Q;
  const cplx det = M.determinant();
  M /= std::pow(det, 1.0 / static_cast<double>(2 * g));
  return M;
}

RMat embed_sp(const CMat& M) {
  const auto n = M.rows();
  RMat S(2 * n, 2 * n);
  S << M.real(), -M.imag(), M.imag(), M.real();
  return S;
}

RMat realified_form(int g) {
  const RMat H = signature_form(g).real();
  RMat J = RMat::Zero(4 * g, 4 * g);
  J.topRightCorner(2 * g, 2 * g) = H;
  J.bottomLeftCorner(2 * g, 2 * g) = -H;
  return J;
}

CMat graph_subspace(const CMat& Z) {
  require_inside(Z);
  const auto g = Z.rows();
  CMat E(2 * g, g);
  E << CMat::Identity(g, g), Z.transpose();
  return E;
}

CMat graph_complement(const CMat& Z) {
  require_inside(Z);
  const auto g = Z.rows();
  CMat F(2 * g, g);
  F << Z.conjugate(), CMat::Identity(g, g);
  return F;
}

int HodgeFiltration::dim() const {
  int d = 0;
  for (const auto& p : pieces) d += static_cast<int>(p.basis.cols());
  return d;
}

int HodgeFiltration::piece_dim(int p) const {
  int d = 0;
  for (const auto& pc : pieces)
    if (pc.p == p) d += static_cast<int>(pc.basis.cols());
  return d;
}

std::vector<CMat> HodgeFiltration::flags() const {
  std::vector<CMat> out;
  const auto rows = pairing.rows();
  for (int k = weight; k >= 0; --k) {
    std::vector<CMat> blocks;
    for (const auto& pc : pieces)
      if (pc.p >= k) blocks.push_back(pc.basis);
    out.push_back(hstack(blocks, rows));
  }
  return out;
}

HodgeFiltration weight1_hodge(const CMat& Z) {
  const CMat E = graph_subspace(Z);
  const CMat F = graph_complement(Z);
  const auto g = Z.rows();
  const cplx i{0.0, 1.0};
  CMat h10(4 * g, 2 * g);
  for (Eigen::Index k = 0; k < g; ++k) {
    const CVec e = E.col(k);
    const CVec f = F.col(k);
    h10.col(k) = realify(e).cast<cplx>() - i * realify(i * e).cast<cplx>();
    h10.col(g + k) = realify(f).cast<cplx>() - i * realify(-i * f).cast<cplx>();
  }
  HodgeFiltration out;
  out.weight = 1;
  out.pairing = realified_form(static_cast<int>(g)).cast<cplx>();
  out.pieces.push_back({1, 0, h10});
  out.pieces.push_back({0, 1, h10.conjugate()});
  return out;
}

HodgeFiltration weight1_standard(int g) {
  if (g < 1) throw Error(ErrorCode::InvalidArgument, "g must be positive");
  CMat h10 = CMat::Zero(2 * g, g);
  for (int k = 0; k < g; ++k) {
    h10(k, k) = 1.0;
    h10(g + k, k) = cplx(0.0, -1.0);
  }
  HodgeFiltration out;
  out.weight = 1;
  out.pairing = standard_symplectic(g).cast<cplx>();
  out.pieces.push_back({1, 0, h10});
  out.pieces.push_back({0, 1, h10.conjugate()});
  return out;
}

HodgeFiltration weight1_from_periods(const CMat& Z) {
  require_square(Z);
  const auto g = Z.rows();
  CMat h10(2 * g, g);
  h10 << CMat::Identity(g, g), Z.transpose();
  HodgeFiltration out;
  out.weight = 1;
  out.pairing = (-standard_symplectic(static_cast<int>(g))).cast<cplx>();
  out.pieces.push_back({1, 0, h10});
  out.pieces.push_back({0, 1, h10.conjugate()});
  return out;
}

HodgeFiltration wedge_power(const HodgeFiltration& f, int k) {
  const int n = static_cast<int>(f.pairing.rows());
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "wedge degree out of range");
  const auto coords = k_subsets(n, k);
  const auto m = static_cast<Eigen::Index>(coords.size());
  const double eps = (k * (k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;

  HodgeFiltration out;
  out.weight = f.weight * k;
  out.pairing = CMat(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      CMat sub(k, k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) sub(r, c) = f.pairing(coords[a][r], coords[b][c]);
      out.pairing(a, b) = eps * sub.determinant();
    }

  // Label every basis vector of f by its type, then wedge k of them.
  std::vector<CVec> vecs;
  std::vector<int> ptype;
  for (const auto& pc : f.pieces)
    for (Eigen::Index c = 0; c < pc.basis.cols(); ++c) {
      vecs.push_back(pc.basis.col(c));
      ptype.push_back(pc.p);
    }
  std::vector<std::vector<CVec>> by_p(out.weight + 1);
  for (const auto& choice : k_subsets(static_cast<int>(vecs.size()), k)) {
    int p = 0;
    CMat V(n, k);
    for (int r = 0; r < k; ++r) {
      p += ptype[choice[r]];
      V.col(r) = vecs[choice[r]];
    }
    CVec plucker(m);
    for (Eigen::Index a = 0; a < m; ++a) {
      CMat sub(k, k);
      for (int r = 0; r < k; ++r) sub.row(r) = V.row(coords[a][r]);
      plucker(a) = sub.determinant();
    }
    by_p[p].push_back(plucker);
  }
  for (int p = out.weight; p >= 0; --p) {
    if (by_p[p].empty()) continue;
    CMat B(m, static_cast<Eigen::Index>(by_p[p].size()));
    for (std::size_t c = 0; c < by_p[p].size(); ++c) B.col(static_cast<Eigen::Index>(c)) = by_p[p][c];
    out.pieces.push_back({p, out.weight - p, B});
  }
  return out;
}

std::vector<std::uint64_t> wedge_hodge_dims(int g) {
  if (g < 1) throw Error(ErrorCode::InvalidArgument, "g must be positive");
  // indices 0..g-1 holomorphic, g..2g-1 antiholomorphic
  std::vector<std::uint64_t> dims(g + 1, 0);
  for (const auto& s : k_subsets(2 * g, g)) {
    int anti = 0;
    for (int idx : s)
      if (idx >= g) ++anti;
    ++dims[anti];
  }
  return dims;
}

PositivityReport hodge_positivity_check(const HodgeFiltration& f, double tol) {
  const int n = f.weight;
  const double parity = n % 2 == 0 ? 1.0 : -1.0;
  if (max_abs(CMat(f.pairing.transpose() - parity * f.pairing)) > tol * std::max(1.0, max_abs(f.pairing))) {
    throw Error(ErrorCode::ParityMismatch, "pairing symmetry does not match the weight");
  }
  const double sign = (n * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  PositivityReport rep;
  rep.min_eig = std::numeric_limits<double>::infinity();
  for (const auto& pc : f.pieces) {
    const CMat gram = minus_i_power(pc.p - pc.q) * sign * (pc.basis.transpose() * f.pairing * pc.basis.conjugate());
    rep.max_nonherm = std::max(rep.max_nonherm, max_abs(CMat(gram - gram.adjoint())));
    rep.min_eig = std::min(rep.min_eig, min_eig_hermitian(gram));
  }
  for (const auto& a : f.pieces)
    for (const auto& b : f.pieces) {
      if (a.p + b.p == n) continue;
      rep.max_cross = std::max(rep.max_cross, max_abs(CMat(a.basis.transpose() * f.pairing * b.basis)));
    }
  rep.ok = rep.min_eig > tol && rep.max_cross <= tol && rep.max_nonherm <= tol * std::max(1.0, rep.min_eig);
  return rep;
}

long long vhs_moduli_dimension(int weight, const std::vector<long long>& dims) {
  if (weight < 1) throw Error(ErrorCode::InvalidArgument, "weight must be positive");
  if (static_cast<int>(dims.size()) != weight + 1) throw Error(ErrorCode::InconsistentDims, "need weight+1 Hodge numbers");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0 || dims[i] != dims[dims.size() - 1 - i])
      throw Error(ErrorCode::InconsistentDims, "Hodge numbers must be non-negative and symmetric");
  }
  // dims[k] = h^{n-k,k}
  if (weight % 2 == 1) {
    long long b = 0;
    for (long long h : dims) b += h;
    const long long r = b / 2;
    long long k1 = 0;
    for (int k = 0; k <= weight / 2; ++k) k1 += dims[k] * dims[k];
    return r * (2 * r + 1) - k1;
  }
  if (weight == 2) {
    const long long a = dims[0];
    const long long b = dims[1];
    const long long m = 2 * a + b;
    return m * (m - 1) / 2 - a * a - b * (b - 1) / 2;
  }
  throw Error(ErrorCode::InvalidArgument, "even weights other than 2 are not supported");
}

}  // namespace cyk
