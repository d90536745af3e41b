#include <doctest.h>

#include <algorithm>
#include <set>

#include "qflagk/sampling.hpp"

using namespace qflagk;

TEST_CASE("trial streams are reproducible and distinct") {
  auto a = sampling::trial_rng(7, 3), b = sampling::trial_rng(7, 3);
  auto c = sampling::trial_rng(7, 4), d = sampling::trial_rng(8, 3);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(x != d());
}

TEST_CASE("random polynomials respect their shape") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = sampling::trial_rng(51, t);
    const sampling::PolyShape shape{4, 2, 3};
    const auto f = sampling::random_laurent(rng, 3, shape);
    CHECK(f.size() <= 4);
    for (const auto& [e, c] : f.terms()) {
      CHECK(c != 0);
      CHECK(abs(c) <= 3);
      for (int k : e) CHECK((k >= -2 && k <= 2));
    }
    const auto g = sampling::random_xpoly(rng, 2, shape);
    for (const auto& [e, c] : g.terms())
      for (int k : e) CHECK((k >= 0 && k <= 2));
    CHECK_FALSE(sampling::random_nonzero_laurent(rng, 1, {1, 0, 1}).is_zero());
  }
}

TEST_CASE("random combinations record their coefficients") {
  const auto& table = gkm::shared_schubert_table(2);
  const auto basis = gkm::max_length_reps(2);
  for (std::uint64_t t = 0; t < 20; ++t) {
    auto rng = sampling::trial_rng(52, t);
    const auto combo = sampling::random_combination(rng, table, basis);
    gkm::TupleT sum = gkm::TupleT::zero(2);
    for (const auto& [w, a] : combo.coefficients) {
      CHECK_FALSE(a.is_zero());
      sum += table.at(w).scaled(a);
    }
    CHECK(sum == combo.tuple);
  }
}

TEST_CASE("generated G- and X-tuples are members") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t t = 0; t < 10; ++t) {
      auto rng = sampling::trial_rng(53, t);
      CHECK(gkm::check_G(sampling::random_g_tuple(rng, n)).ok());
      CHECK(gkm::check_X(sampling::random_x_tuple(rng, n)).ok());
    }
}

TEST_CASE("mutation touches distinct components by +1") {
  auto rng = sampling::trial_rng(54, 0);
  const auto original = gkm::TupleT::zero(2);
  for (std::size_t k = 0; k <= 8; ++k) {
    auto f = original;
    const auto touched = sampling::mutate(rng, f, k);
    CHECK(touched.size() == k);
    CHECK(std::set<std::size_t>(touched.begin(), touched.end()).size() == k);
    for (std::size_t w = 0; w < f.size(); ++w) {
      const bool hit = std::find(touched.begin(), touched.end(), w) != touched.end();
      CHECK(f[w] == (hit ? ring::LaurentPoly::constant(2, 1) : ring::LaurentPoly(2)));
    }
  }
  // k beyond the tuple size touches every component once.
  auto f = original;
  CHECK(sampling::mutate(rng, f, 20).size() == 8);
}
