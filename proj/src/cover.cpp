#include "cyk/cover.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cyk/combinatorics.hpp"
#include "cyk/domain.hpp"
#include "cyk/error.hpp"
#include "cyk/parallel/kernels.hpp"

namespace cyk {

namespace {

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

// Lehmer rank of a permutation.
std::uint64_t perm_rank(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return r;
}

std::uint64_t element_key(const CoverGroupElement& e) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < e.signs.size(); ++i) mask |= static_cast<std::uint64_t>(e.signs[i]) << i;
  return perm_rank(e.perm) << e.signs.size() | mask;
}

}  // namespace

Arrangement branch_arrangement(const std::vector<GaussRational>& lambdas) {
  if (lambdas.size() % 2 == 0) throw Error(ErrorCode::EvenCount, "expected 2g+1 finite branch points");
  if (lambdas.size() < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 finite branch points");
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = i + 1; j < lambdas.size(); ++j)
      if (lambdas[i] == lambdas[j]) throw Error(ErrorCode::DuplicateBranchPoint, "repeated branch point");
  Arrangement arr;
  arr.g = static_cast<int>(lambdas.size() - 1) / 2;
  for (const auto& l : lambdas) {
    Covector h;
    GaussRational p(1);
    for (int k = 0; k <= arr.g; ++k) {
      h.push_back(p);
      p = p * l;
    }
    arr.hyperplanes.push_back(h);
  }
  Covector inf(arr.g + 1, GaussRational(0));
  inf.back() = GaussRational(1);
  arr.hyperplanes.push_back(inf);
  return arr;
}

int exact_rank(std::vector<Covector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (!rows[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const GaussRational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

GeneralPositionResult general_position(const Arrangement& arr, bool parallel) {
  const int m = static_cast<int>(arr.hyperplanes.size());
  std::vector<std::vector<int>> subsets = k_subsets(m, arr.g);
  for (auto& s : k_subsets(m, arr.g + 1)) subsets.push_back(std::move(s));
  const kernels::SubsetPredicate ok = [&arr](const std::vector<int>& s) {
    std::vector<Covector> rows;
    for (int i : s) rows.push_back(arr.hyperplanes[i]);
    return exact_rank(rows) == static_cast<int>(s.size());
  };
  const auto bad = parallel ? kernels::first_violation_omp(subsets, ok) : kernels::first_violation_serial(subsets, ok);
  GeneralPositionResult res;
  res.subsets_checked = subsets.size();
  res.ok = !bad.has_value();
  if (bad) res.violating = subsets[*bad];
  return res;
}

std::vector<Flat> pairwise_intersections(const Arrangement& arr) {
  if (!general_position(arr).ok) throw Error(ErrorCode::NotGeneralPosition, "arrangement is not in general position");
  std::vector<Flat> out;
  const int m = static_cast<int>(arr.hyperplanes.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) out.push_back({i, j, arr.g - 2, arr.g < 2});
  return out;
}

int CoverGroupElement::sign_sum() const { return std::accumulate(signs.begin(), signs.end(), 0); }

CoverGroupElement compose(const CoverGroupElement& a, const CoverGroupElement& b) {
  const std::size_t g = a.signs.size();
  const std::vector<int> ainv = inverse(a.perm);
  CoverGroupElement c;
  c.signs.resize(g);
  c.perm.resize(g);
  for (std::size_t i = 0; i < g; ++i) {
    c.signs[i] = (a.signs[i] + b.signs[ainv[i]]) % 2;
    c.perm[i] = a.perm[b.perm[i]];
  }
  return c;
}

CoverGroupElement identity_element(int g) {
  CoverGroupElement e{std::vector<int>(g, 0), std::vector<int>(g)};
  std::iota(e.perm.begin(), e.perm.end(), 0);
  return e;
}

std::vector<CoverGroupElement> full_group(int g) {
  std::vector<CoverGroupElement> out;
  for (int mask = 0; mask < (1 << g); ++mask) {
    std::vector<int> perm(g);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      CoverGroupElement e{std::vector<int>(g), perm};
      for (int i = 0; i < g; ++i) e.signs[i] = (mask >> i) & 1;
      out.push_back(e);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

GroupN group_N(int g) {
  if (g < 1) throw Error(ErrorCode::InvalidArgument, "g must be positive");
  if (g > 6) throw Error(ErrorCode::GTooLarge, "group enumeration is limited to g <= 6");
  GroupN res;
  res.g = g;
  const auto all = full_group(g);
  res.full_order = all.size();
  for (const auto& e : all)
    if (e.in_N()) res.elements.push_back(e);
  res.order = res.elements.size();
  res.index = res.full_order / res.order;

  std::vector<std::int64_t> where(static_cast<std::size_t>(factorial(g)) << g, -1);
  for (std::size_t i = 0; i < res.elements.size(); ++i) where[element_key(res.elements[i])] = static_cast<std::int64_t>(i);
  res.closed = true;
  if (g <= 5) {
    res.has_table = true;
    res.table.resize(res.order * res.order);
    for (std::size_t i = 0; i < res.order; ++i)
      for (std::size_t j = 0; j < res.order; ++j) {
        const std::int64_t k = where[element_key(compose(res.elements[i], res.elements[j]))];
        if (k < 0) res.closed = false;
        res.table[i * res.order + j] = static_cast<std::uint32_t>(std::max<std::int64_t>(k, 0));
      }
  } else {
    // Closure against a generating set: adjacent transpositions and double flips.
    std::vector<CoverGroupElement> gens;
    for (int i = 0; i + 1 < g; ++i) {
      CoverGroupElement t = identity_element(g);
      std::swap(t.perm[i], t.perm[i + 1]);
      gens.push_back(t);
      CoverGroupElement f = identity_element(g);
      f.signs[i] = f.signs[i + 1] = 1;
      gens.push_back(f);
    }
    for (const auto& x : res.elements)
      for (const auto& s : gens)
        if (where[element_key(compose(x, s))] < 0) res.closed = false;
  }

  // Sign sum mod 2 as a map to Z/2: homomorphism check, exhaustive for g <= 4.
  res.sign_sum_is_homomorphism = true;
  const std::size_t stride = g <= 4 ? 1 : 97;
  for (std::size_t i = 0; i < all.size(); i += stride)
    for (std::size_t j = 0; j < all.size(); j += stride) {
      const int lhs = compose(all[i], all[j]).sign_sum() % 2;
      const int rhs = (all[i].sign_sum() + all[j].sign_sum()) % 2;
      if (lhs != rhs) res.sign_sum_is_homomorphism = false;
    }
  std::uint64_t kernel = 0;
  for (const auto& e : all)
    if (e.sign_sum() % 2 == 0) ++kernel;
  res.is_sign_kernel = res.sign_sum_is_homomorphism && kernel == res.order &&
                       res.order == (std::uint64_t{1} << (g - 1)) * factorial(g);
  return res;
}

namespace {

// Marks: 0..2g+1 Weierstrass, then generic x_k = W + 2k and iota x_k = W + 2k + 1.
struct Marks {
  int g;
  int weierstrass() const { return 2 * g + 2; }
  int count() const { return weierstrass() + 2 * g; }
  bool is_w(int m) const { return m < weierstrass(); }
  int iota(int m) const { return is_w(m) ? m : weierstrass() + ((m - weierstrass()) ^ 1); }
};

std::vector<int> act_on_tuple(const CoverGroupElement& e, const std::vector<int>& t, const Marks& mk) {
  const std::vector<int> inv = inverse(e.perm);
  std::vector<int> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const int m = t[inv[i]];
    out[i] = e.signs[i] ? mk.iota(m) : m;
  }
  return out;
}

}  // namespace

RamificationReport ramification_analysis(int g) {
  if (g < 1) throw Error(ErrorCode::InvalidArgument, "g must be positive");
  if (g > 4) throw Error(ErrorCode::GTooLarge, "ramification enumeration is limited to g <= 4");
  const Marks mk{g};
  const auto G = full_group(g);
  RamificationReport rep;
  rep.g = g;
  std::set<int> components;

  std::vector<int> t(g, 0);
  const int base = mk.count();
  std::size_t total = 1;
  for (int i = 0; i < g; ++i) total *= static_cast<std::size_t>(base);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = 0; i < g; ++i) {
      t[i] = static_cast<int>(c % base);
      c /= base;
    }
    bool outside_N = false;
    for (const auto& e : G)
      if (!e.in_N() && act_on_tuple(e, t, mk) == t) {
        outside_N = true;
        break;
      }
    int wcount = 0;
    int wlabel = -1;
    std::set<int> distinct_w;
    for (int m : t)
      if (mk.is_w(m)) {
        ++wcount;
        wlabel = m;
        distinct_w.insert(m);
      }
    if (outside_N != (wcount > 0)) ++rep.mismatches;
    if (outside_N && wcount == 1) components.insert(wlabel);
    if (static_cast<int>(distinct_w.size()) > g) ++rep.infeasible_tuples;
    ++rep.tuples;
  }
  rep.ramification_components = components.size();

  // g distinct Weierstrass marks: every ordering lies in one orbit.
  rep.points_single_orbit = true;
  for (const auto& s : k_subsets(mk.weierstrass(), g)) {
    std::set<std::vector<int>> orbit;
    for (const auto& e : G) orbit.insert(act_on_tuple(e, s, mk));
    std::vector<int> p = s;
    do {
      if (!orbit.count(p)) rep.points_single_orbit = false;
    } while (std::next_permutation(p.begin(), p.end()));
    ++rep.point_orbits;
  }

  std::vector<int> generic(g);
  for (int i = 0; i < g; ++i) generic[i] = mk.weierstrass() + 2 * i;
  std::size_t stab = 0;
  for (const auto& e : G)
    if (act_on_tuple(e, generic, mk) == generic) ++stab;
  rep.generic_trivial = stab == 1;

  std::vector<int> marked = generic;
  marked[g - 1] = 0;
  CoverGroupElement flip = identity_element(g);
  flip.signs[g - 1] = 1;
  rep.weierstrass_slot_fixed = act_on_tuple(flip, marked, mk) == marked && !flip.in_N();

  rep.ok = rep.mismatches == 0 && rep.ramification_components == static_cast<std::size_t>(2 * g + 2) &&
           rep.points_single_orbit && rep.point_orbits == binomial(2 * g + 2, g) && rep.infeasible_tuples == 0 &&
           rep.generic_trivial && rep.weierstrass_slot_fixed;
  return rep;
}

SymbolImage apply_element(const CoverGroupElement& e, int g, int k, int a, int l, int b) {
  const int pk = e.perm[k];
  const int pl = e.perm[l];
  SymbolImage img;
  img.sign = (e.signs[pk] + e.signs[pl]) % 2 == 0 ? 1 : -1;
  img.index = ((pk * g + a) * g + pl) * g + b;
  return img;
}

InvarianceReport invariance_check(int g) {
  if (g < 1) throw Error(ErrorCode::InvalidArgument, "g must be positive");
  if (g > 6) throw Error(ErrorCode::GTooLarge, "group enumeration is limited to g <= 6");
  const auto G = full_group(g);
  const int size = g * g * g * g;
  auto push = [&](const CoverGroupElement& e, const std::vector<int>& v) {
    std::vector<int> out(size, 0);
    for (int k = 0; k < g; ++k)
      for (int a = 0; a < g; ++a)
        for (int l = 0; l < g; ++l)
          for (int b = 0; b < g; ++b) {
            const int c = v[((k * g + a) * g + l) * g + b];
            if (c == 0) continue;
            const SymbolImage img = apply_element(e, g, k, a, l, b);
            out[img.index] += img.sign * c;
          }
    return out;
  };
  InvarianceReport rep;
  rep.g = g;
  rep.invariant_under_N = rep.invariant_under_full = rep.offdiagonal_invariant_under_N = true;
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      std::vector<int> diag(size, 0), off(size, 0);
      for (int k = 0; k < g; ++k)
        for (int l = 0; l < g; ++l) (k == l ? diag : off)[((k * g + a) * g + l) * g + b] = 1;
      ++rep.classes;
      for (const auto& e : G) {
        const bool fixed = push(e, diag) == diag;
        if (!fixed) {
          rep.invariant_under_full = false;
          if (e.in_N()) rep.invariant_under_N = false;
        }
        if (e.in_N() && push(e, off) != off) rep.offdiagonal_invariant_under_N = false;
      }
    }
  rep.ok = rep.invariant_under_N && rep.classes == g * g;
  return rep;
}

HodgeDiamond hodge_numbers(int g) {
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "Hodge numbers need g >= 2");
  HodgeDiamond d;
  d.g = g;
  for (int p = 0; p <= g; ++p) d.middle.push_back(binomial(g, p) * binomial(g, p));
  d.cross_checked = d.middle == wedge_hodge_dims(g);
  d.b2 = binomial(2 * g + 2, 2) + 1;
  if (g == 2) {
    d.b2_flagged = true;
    d.note = "b2 formula gives 16 at g=2; a K3 surface has b2=22 and h11=20, not the middle-row value 4";
  }
  return d;
}

}  // namespace cyk
