#pragma once

#include <vector>

#include "nervepool/matrix.hpp"
#include "nervepool/simplicial_complex.hpp"

namespace nervepool {

using BettiVector = std::vector<int>;

// Rank over GF(2) of the support of m (any nonzero entry counts as 1).
int rank_gf2(const SparseMatrix& m);

// beta_p = n_p - rank(B_p) - rank(B_{p+1}) over GF(2), for p = 0..dim(K).
BettiVector betti(const SimplicialComplex& k);

}  // namespace nervepool
