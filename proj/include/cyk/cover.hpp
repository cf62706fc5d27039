#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyk/rational.hpp"

namespace cyk {

using Covector = std::vector<GaussRational>;

struct Arrangement {
  int g = 0;
  std::vector<Covector> hyperplanes;  // each of length g+1
};

// H_i = (1, l_i, ..., l_i^g) for the 2g+1 finite points, H_inf = (0, ..., 0, 1).
Arrangement branch_arrangement(const std::vector<GaussRational>& lambdas);

// Exact rank by Gaussian elimination.
int exact_rank(std::vector<Covector> rows);

struct GeneralPositionResult {
  bool ok = false;
  std::vector<int> violating;  // first failing subset, zero based
  std::size_t subsets_checked = 0;
};

// Every g-subset has rank g and every (g+1)-subset has rank g+1. The first
// violation in (size, lexicographic) order is reported.
GeneralPositionResult general_position(const Arrangement& arr, bool parallel = true);

struct Flat {
  int i = 0;
  int j = 0;
  int projective_dim = 0;  // g - 2
  bool vacuous = false;    // empty in P^1
};
std::vector<Flat> pairwise_intersections(const Arrangement& arr);

// (signs, perm) in (Z/2)^g x| S_g; perm[i] is the image of i.
struct CoverGroupElement {
  std::vector<int> signs;
  std::vector<int> perm;

  int sign_sum() const;
  bool in_N() const { return sign_sum() % 2 == 0; }
  friend bool operator==(const CoverGroupElement& a, const CoverGroupElement& b) {
    return a.signs == b.signs && a.perm == b.perm;
  }
};

// (s, p)(s', p') = (s + p.s', p p') with (p.s')_i = s'_{p^{-1}(i)}.
CoverGroupElement compose(const CoverGroupElement& a, const CoverGroupElement& b);
CoverGroupElement identity_element(int g);
// All 2^g g! elements of the full group, signs major.
std::vector<CoverGroupElement> full_group(int g);

struct GroupN {
  int g = 0;
  std::vector<CoverGroupElement> elements;
  std::uint64_t order = 0;
  std::uint64_t full_order = 0;
  std::uint64_t index = 0;
  bool closed = false;
  bool has_table = false;               // full multiplication table built (g <= 5)
  std::vector<std::uint32_t> table;     // table[i * order + j] = index of e_i e_j
  bool sign_sum_is_homomorphism = false;
  bool is_sign_kernel = false;
};

// Throws GTooLarge for g > 6.
GroupN group_N(int g);

struct RamificationReport {
  int g = 0;
  std::size_t tuples = 0;
  std::size_t mismatches = 0;            // stabilizer not in N  xor  has a Weierstrass mark
  std::size_t ramification_components = 0;  // expected 2g+2
  std::size_t point_orbits = 0;          // G-orbits of tuples of g distinct Weierstrass marks
  bool points_single_orbit = false;      // each g-set of marks gives one orbit
  std::size_t infeasible_tuples = 0;     // tuples carrying g+1 distinct marks (always 0)
  bool generic_trivial = false;
  bool weierstrass_slot_fixed = false;
  bool ok = false;
};

// Marked tuples: slots carry a Weierstrass mark (fixed by the flip) or a
// generic point x_k (moved to iota x_k). Supported for g <= 4.
RamificationReport ramification_analysis(int g);

// Symbol e_{(k,a),(l,b)}: dzbar of differential b on slot l (x) d/dz of
// differential a on slot k. Index ((k g + a) g + l) g + b.
struct SymbolImage {
  int sign = 1;
  int index = 0;
};
SymbolImage apply_element(const CoverGroupElement& e, int g, int k, int a, int l, int b);

struct InvarianceReport {
  int g = 0;
  int classes = 0;                  // g^2 diagonal classes K_{a,b}
  bool invariant_under_N = false;
  bool invariant_under_full = false;
  bool offdiagonal_invariant_under_N = false;  // diagnostic only
  bool ok = false;
};
InvarianceReport invariance_check(int g);

struct HodgeDiamond {
  int g = 0;
  std::vector<std::uint64_t> middle;  // h^{g-p,p}
  std::uint64_t b2 = 0;
  bool cross_checked = false;         // equals the wedge enumeration
  bool b2_flagged = false;            // g = 2: formula gives 16, a K3 has 22
  std::string note;
};
HodgeDiamond hodge_numbers(int g);

}  // namespace cyk
