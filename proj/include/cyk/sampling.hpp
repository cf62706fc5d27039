#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cyk/linalg.hpp"

namespace cyk {

using Rng = std::mt19937_64;

// 2g+1 sorted real branch points in [-span, span] with gaps >= min_gap.
std::vector<cplx> random_real_branch_points(int g, Rng& rng, double span = 3.0, double min_gap = 0.2);
// Z = X + iY with X symmetric and Y positive definite, min eig(Y) >= 0.4.
CMat random_siegel(int g, Rng& rng);
// Operator norm drawn uniformly from [0, max_norm].
CMat random_domain_point(int g, Rng& rng, double max_norm = 0.9);
CMat random_unitary(int n, Rng& rng);
// Element of SU(g,g): transitive witness of a random domain point times diag(U, V).
CMat random_su(int g, Rng& rng, double max_norm = 0.7);

}  // namespace cyk
