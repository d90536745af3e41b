#pragma once

// Seeded generators of polynomials and of tuples that are valid by
// construction (built from Schubert classes or line-bundle classes, never
// from a membership checker).

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qflagk/gkm.hpp"

namespace qflagk::sampling {

using Rng = std::mt19937_64;

/// Independent stream for one trial of a seeded batch.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

struct PolyShape {
  int terms = 3;        // at most this many terms
  int exponent = 2;     // |exponent| <= bound (X-polynomials: degree per variable)
  int coefficient = 5;  // |coefficient| <= bound, never 0
};

ring::LaurentPoly random_laurent(Rng& rng, std::size_t n, PolyShape shape = {});
ring::XPoly random_xpoly(Rng& rng, std::size_t n, PolyShape shape = {});
/// Same shape but guaranteed nonzero.
ring::LaurentPoly random_nonzero_laurent(Rng& rng, std::size_t n, PolyShape shape = {});

struct Combination {
  gkm::TupleT tuple;
  std::map<weyl::SignedPerm, ring::LaurentPoly> coefficients;
};

/// sum a_w [O_w] over `basis` with random nonzero a_w.
Combination random_combination(Rng& rng, const gkm::SchubertTable& table, const std::vector<weyl::SignedPerm>& basis,
                               PolyShape shape = {1, 2, 3});

/// Sum of c * [L_a] * [L_b] terms with random XPoly c; valid in the G-model.
gkm::TupleG random_g_tuple(Rng& rng, std::size_t n);
/// Sum of a * j_expand(g) with random Laurent a and random G-tuples g.
gkm::TupleX random_x_tuple(Rng& rng, std::size_t n);

/// Adds +1 to k distinct random components; returns the touched indices.
template <gkm::Model M>
std::vector<std::size_t> mutate(Rng& rng, gkm::Tuple<M>& f, std::size_t k);

}  // namespace qflagk::sampling
