#pragma once

#include <cstdint>
#include <vector>

#include "cyk/linalg.hpp"

namespace cyk {

// True iff the smallest eigenvalue of I - Z Z^H exceeds tol.
bool contains(const CMat& Z, double tol);

// diag(I_g, -I_g)
CMat signature_form(int g);

// M^H H M = H and |det M - 1| <= tol.
bool su_check(const CMat& M, double tol);

// (A Z + B)(C Z + D)^{-1}
CMat act(const CMat& M, const CMat& Z);

// Element M with act(M, 0) = Z.
CMat transitive_witness(const CMat& Z);

// Real 4g x 4g image of M under x + iy -> (x, y).
RMat embed_sp(const CMat& M);
// Imaginary part of the Hermitian form q(u, w) = u^H H w after realification.
RMat realified_form(int g);

// Columns [I; Z^t]; q restricted to them is I - conj(Z) Z^t.
CMat graph_subspace(const CMat& Z);
// Columns [conj(Z); I], the q-orthogonal complement of graph_subspace.
CMat graph_complement(const CMat& Z);

struct HodgePiece {
  int p = 0;
  int q = 0;
  CMat basis;  // columns
};

struct HodgeFiltration {
  int weight = 0;
  CMat pairing;  // bilinear, Q(u, w) = u^t pairing w
  std::vector<HodgePiece> pieces;

  int dim() const;
  int piece_dim(int p) const;
  // F^k spanned by pieces with p >= k, for k = weight..0.
  std::vector<CMat> flags() const;
};

// Weight one on C^{4g}: H^{1,0} = {x - i J x}, J the complex structure that is
// +i on the graph of Z and -i on its q-complement.
HodgeFiltration weight1_hodge(const CMat& Z);
// Weight one on C^{2g} with Q = [[0, I], [-I, 0]], H^{1,0} = span(e_k - i e_{g+k}).
HodgeFiltration weight1_standard(int g);
// Weight one from a normalized period matrix (I | Z): H^{1,0} spanned by the
// rows, paired by the inverse intersection form.
HodgeFiltration weight1_from_periods(const CMat& Z);
// k-th exterior power in Plucker coordinates. The pairing is
// (-1)^{k(k-1)/2} det Q[I, J], the one induced by the cup product.
HodgeFiltration wedge_power(const HodgeFiltration& f, int k);

// h^{g-p,p} of the g-th exterior power of C^g + conj(C^g), by enumeration.
std::vector<std::uint64_t> wedge_hodge_dims(int g);

struct PositivityReport {
  bool ok = false;
  double min_eig = 0.0;      // smallest eigenvalue over all signed Gram blocks
  double max_cross = 0.0;    // largest pairing between pieces that must be orthogonal
  double max_nonherm = 0.0;  // Hermitian defect of the signed Gram blocks
};

// Checks (-i)^{p-q} (-1)^{n(n-1)/2} Q(v, conj v) > 0 on each H^{p,q} and
// Q(H^{p,q}, H^{p',q'}) = 0 unless p + p' = n.
PositivityReport hodge_positivity_check(const HodgeFiltration& f, double tol = 1e-10);

// Real dimension of G / K_1. dims = (h^{n,0}, h^{n-1,1}, ..., h^{0,n}).
// Odd n: Sp(b, R) / prod_{p > n/2} U(h^{p,q}). n = 2: SO(2 h^{2,0}, h^{1,1}) / (U(h^{2,0}) x SO(h^{1,1})).
long long vhs_moduli_dimension(int weight, const std::vector<long long>& dims);

}  // namespace cyk
