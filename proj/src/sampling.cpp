#include "qflagk/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace qflagk::sampling {

using ring::LaurentPoly;
using ring::XPoly;

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return Rng(seq);
}

namespace {

int nonzero_coefficient(Rng& rng, int bound) {
  std::uniform_int_distribution<int> d(1, std::max(bound, 1));
  std::bernoulli_distribution neg(0.5);
  const int c = d(rng);
  return neg(rng) ? -c : c;
}

template <class Poly>
Poly random_poly(Rng& rng, std::size_t n, PolyShape shape, int lo) {
  std::uniform_int_distribution<int> count(0, std::max(shape.terms, 0));
  std::uniform_int_distribution<int> exp(lo, shape.exponent);
  Poly f(n);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    ring::Exponents e(n);
    for (auto& x : e) x = exp(rng);
    const int c = nonzero_coefficient(rng, shape.coefficient);
    // A repeated monomial would merge coefficients past the bound.
    if (f.coefficient(e) == 0) f.add_term(e, c);
  }
  return f;
}

}  // namespace

LaurentPoly random_laurent(Rng& rng, std::size_t n, PolyShape shape) {
  return random_poly<LaurentPoly>(rng, n, shape, -shape.exponent);
}

XPoly random_xpoly(Rng& rng, std::size_t n, PolyShape shape) { return random_poly<XPoly>(rng, n, shape, 0); }

LaurentPoly random_nonzero_laurent(Rng& rng, std::size_t n, PolyShape shape) {
  shape.terms = std::max(shape.terms, 1);
  while (true) {
    LaurentPoly f = random_laurent(rng, n, shape);
    if (!f.is_zero()) return f;
  }
}

Combination random_combination(Rng& rng, const gkm::SchubertTable& table, const std::vector<weyl::SignedPerm>& basis,
                               PolyShape shape) {
  const std::size_t n = table.rank();
  Combination c{gkm::TupleT::zero(n), {}};
  for (const auto& w : basis) {
    LaurentPoly a = random_nonzero_laurent(rng, n, shape);
    c.tuple += table.at(w).scaled(a);
    c.coefficients[w] = std::move(a);
  }
  return c;
}

gkm::TupleG random_g_tuple(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, n);  // 0 means "no factor"
  gkm::TupleG f = gkm::TupleG::zero(n);
  for (int t = 0; t < 2; ++t) {
    gkm::TupleG term = gkm::TupleG::constant(n, random_xpoly(rng, n, {2, 1, 4}));
    for (int k = 0; k < 2; ++k)
      if (const std::size_t nu = pick(rng); nu != 0) term = term * gkm::canonical_class_L(nu, n);
    f += term;
  }
  return f;
}

gkm::TupleX random_x_tuple(Rng& rng, std::size_t n) {
  gkm::TupleX f = gkm::TupleX::zero(n);
  for (int t = 0; t < 2; ++t) f += gkm::j_expand(random_g_tuple(rng, n)).scaled(random_laurent(rng, n, {2, 1, 3}));
  return f;
}

template <gkm::Model M>
std::vector<std::size_t> mutate(Rng& rng, gkm::Tuple<M>& f, std::size_t k) {
  std::vector<std::size_t> idx(f.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(std::min(k, idx.size()));
  std::sort(idx.begin(), idx.end());
  const auto one = gkm::Tuple<M>::Poly::constant(f.rank(), 1);
  for (std::size_t i : idx) f[i] += one;
  return idx;
}

template std::vector<std::size_t> mutate(Rng&, gkm::TupleT&, std::size_t);
template std::vector<std::size_t> mutate(Rng&, gkm::TupleX&, std::size_t);
template std::vector<std::size_t> mutate(Rng&, gkm::TupleG&, std::size_t);

}  // namespace qflagk::sampling
