#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace cyk {

std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

// Sign of the permutation given as an image list.
int permutation_sign(const std::vector<int>& perm);

// Sign of the permutation that sorts the concatenation (first, second),
// where both are increasing and disjoint.
int shuffle_sign(const std::vector<int>& first, const std::vector<int>& second);

// Leibniz expansion; m is a square row-major nested vector. Intended for
// the small sizes used in exterior-algebra bookkeeping and exact arithmetic.
template <class T>
T leibniz_det(const std::vector<std::vector<T>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return T(1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total(0);
  do {
    T term(permutation_sign(perm));
    for (int r = 0; r < n; ++r) term = term * m[r][perm[r]];
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace cyk
