#pragma once

// Brute-force references that share no code path with the library proper.

#include "qflagk/weyl.hpp"

namespace qflagk::oracle {

/// S_n Bruhat order by rank matrices: v <= w iff for all i, j
/// #{a <= i : v(a) >= j} <= #{a <= i : w(a) >= j}.
bool rank_matrix_leq(const weyl::Perm& v, const weyl::Perm& w);

}  // namespace qflagk::oracle
