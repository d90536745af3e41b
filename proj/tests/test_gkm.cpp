#include <doctest.h>

#include <functional>
#include <map>
#include <variant>
#include <vector>

#include "qflagk/gkm.hpp"
#include "qflagk/sampling.hpp"

using namespace qflagk;
using namespace qflagk::gkm;
using ring::MonomialImage;

namespace {

LaurentPoly L(const char* s, std::size_t n) { return ring::parse_laurent(s, n); }
XPoly X(const char* s, std::size_t n) { return ring::parse_xpoly(s, n); }

std::vector<MonomialImage> identity_assignment(std::size_t n) {
  std::vector<MonomialImage> a;
  for (std::size_t v = 0; v < n; ++v) {
    ring::Exponents e(n, 0);
    e[v] = 1;
    a.push_back({1, e});
  }
  return a;
}

// x_i := sign * x_j^power, everything else fixed.
bool vanishes_under(const LaurentPoly& h, std::size_t i, int sign, std::size_t j, int power) {
  auto a = identity_assignment(h.rank());
  a[i].sign = sign;
  a[i].exponents.assign(h.rank(), 0);
  a[i].exponents[j] = power;
  return ring::substitute(h, a).is_zero();
}

// (x^m - 1) | h for a root m, decided by vanishing on the subtorus x^m = 1.
bool root_divides(const weyl::Weight& m, const LaurentPoly& h) {
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < m.size(); ++v)
    if (m[v] != 0) support.push_back(v);
  if (support.size() == 1) return vanishes_under(h, support[0], 1, support[0], 0) && vanishes_under(h, support[0], -1, support[0], 0);
  const std::size_t i = support[0], j = support[1];
  return vanishes_under(h, i, 1, j, m[i] == m[j] ? -1 : 1);
}

bool oracle_T(const TupleT& f) {
  const auto& g = GroupTables::of(f.rank());
  for (std::size_t a = 0; a < g.roots().size(); ++a)
    for (std::size_t w = 0; w < f.size(); ++w)
      if (!root_divides(g.roots()[a].weight(), f[w] - f[g.left_reflection(a, w)])) return false;
  return true;
}

bool oracle_X(const TupleX& f) {
  const auto& g = GroupTables::of(f.rank());
  for (std::size_t p = 0; p < g.pairs().size(); ++p) {
    const auto [mu, nu] = g.pairs()[p];
    for (std::size_t t = 0; t < f.size(); ++t) {
      const LaurentPoly h = f[t] - f[g.left_transposition(p, t)];
      if (!vanishes_under(h, mu, 1, nu, 1) || !vanishes_under(h, mu, 1, nu, -1)) return false;
    }
  }
  return true;
}

bool oracle_G(const TupleG& f) {
  const auto& g = GroupTables::of(f.rank());
  for (std::size_t p = 0; p < g.pairs().size(); ++p) {
    const auto [mu, nu] = g.pairs()[p];
    for (std::size_t t = 0; t < f.size(); ++t)
      if (!vanishes_under(ring::x_expand(f[t] - f[g.left_transposition(p, t)]), mu, 1, nu, 1)) return false;
  }
  return true;
}

// All reduced words of w, by peeling right descents.
void reduced_words(const SignedPerm& w, std::vector<std::size_t>& suffix, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = w.size();
  if (weyl::length(w) == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const SignedPerm ws = w * weyl::simple_reflection(i, n);
    if (weyl::length(ws) < weyl::length(w)) {
      suffix.push_back(i);
      reduced_words(ws, suffix, out);
      suffix.pop_back();
    }
  }
}

LaurentPoly coefficient_or_zero(const std::map<SignedPerm, LaurentPoly>& m, const SignedPerm& w, std::size_t n) {
  const auto it = m.find(w);
  return it == m.end() ? LaurentPoly(n) : it->second;
}

}  // namespace

TEST_CASE("T-model checker examples") {
  const TupleT c = TupleT::constant(1, L("x1^3 - 2", 1));
  CHECK(check_T(c).ok());
  CHECK(check_T(c).checks == 2);
  CHECK(check_T(TupleT(1, {L("1", 1), L("x1^2", 1)})).ok());
  const auto bad = check_T(TupleT(1, {L("1", 1), L("x1", 1)}));
  REQUIRE(bad.violations.size() == 2);
  CHECK(bad.violations[0].vertex == "[1]");
  CHECK(bad.violations[0].neighbor == "[-1]");
  CHECK(bad.violations[0].edge == "[2]");
  CHECK(check_T(TupleT::zero(3)).checks == 9 * 48);
}

TEST_CASE("X- and G-model checker examples") {
  CHECK(check_X(TupleX::constant(2, L("x1", 2))).ok());
  CHECK(check_G(TupleG::constant(2, X("X1", 2))).ok());
  CHECK(check_G(TupleG(2, {X("X1", 2), X("X2", 2)})).ok());
  const auto bad = check_X(TupleX(2, {L("x1", 2), L("x2", 2)}));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.violations[0].edge == "(1,2)");
  CHECK(bad.violations[0].vertex == "[1, 2]");
  CHECK(bad.violations[0].neighbor == "[2, 1]");
  CHECK(check_X(TupleX::zero(3)).checks == 3 * 6);
}

TEST_CASE("tuples reject the wrong index set") {
  CHECK_THROWS_AS(TupleT(2, std::vector<LaurentPoly>(7, LaurentPoly(2))), Error);
  CHECK_THROWS_AS(TupleG(2, {X("X1", 2)}), Error);
  CHECK_THROWS_AS(TupleX(2, {L("x1", 2), L("x1", 1)}), RankMismatch);
}

TEST_CASE("checkers agree with the substitution oracle") {
  const auto& table = shared_schubert_table(2);
  const auto basis = weyl::enumerate_W(2);
  for (std::uint64_t t = 0; t < 60; ++t) {
    auto rng = sampling::trial_rng(31, t);
    auto ft = sampling::random_combination(rng, table, basis).tuple;
    auto fx = sampling::random_x_tuple(rng, 2);
    auto fg = sampling::random_g_tuple(rng, 2);
    CHECK(oracle_T(ft));
    CHECK(check_T(ft).ok());
    CHECK(oracle_X(fx));
    CHECK(check_X(fx).ok());
    CHECK(oracle_G(fg));
    CHECK(check_G(fg).ok());
    sampling::mutate(rng, ft, 1 + t % 3);
    sampling::mutate(rng, fx, 1 + t % 2);
    sampling::mutate(rng, fg, 1 + t % 2);
    CHECK(check_T(ft).ok() == oracle_T(ft));
    CHECK(check_X(fx).ok() == oracle_X(fx));
    CHECK(check_G(fg).ok() == oracle_G(fg));
  }
  // Random tuples are almost never members; the verdicts must still agree.
  for (std::uint64_t t = 0; t < 40; ++t) {
    auto rng = sampling::trial_rng(32, t);
    std::vector<LaurentPoly> vals;
    for (int k = 0; k < 8; ++k) vals.push_back(sampling::random_laurent(rng, 2, {2, 2, 2}));
    const TupleT f(2, vals);
    CHECK(check_T(f).ok() == oracle_T(f));
  }
}

TEST_CASE("index action") {
  const TupleT f(1, {L("x1", 1), L("3", 1)});
  CHECK(act_on_indices(SignedPerm::identity(1), f) == f);
  CHECK(act_on_indices(weyl::simple_reflection(1, 1), f) == TupleT(1, {L("3", 1), L("x1", 1)}));
  const auto c = TupleT::constant(2, L("x2", 2));
  for (const auto& v : weyl::enumerate_W(2)) CHECK(act_on_indices(v, c) == c);
  // u.(v.f) is f_{w u^{-1} v^{-1}} = (v u).f.
  auto rng = sampling::trial_rng(33, 0);
  const auto g = sampling::random_combination(rng, shared_schubert_table(2), weyl::enumerate_W(2)).tuple;
  for (const auto& u : weyl::enumerate_W(2))
    for (const auto& v : weyl::enumerate_W(2))
      CHECK(act_on_indices(v * u, g) == act_on_indices(u, act_on_indices(v, g)));
}

TEST_CASE("coefficient action") {
  const TupleX f = TupleX::constant(1, L("x1", 1));
  CHECK(act_on_coefficients(SignedPerm::identity(1), f) == f);
  CHECK(act_on_coefficients(weyl::simple_reflection(1, 1), f) == TupleX::constant(1, L("x1^-1", 1)));
  const TupleX sym = TupleX::constant(2, L("x1 + x1^-1", 2));
  for (const auto& v : weyl::enumerate_WG(2)) CHECK(act_on_coefficients(v, sym) == sym);
  CHECK_THROWS_AS(act_on_coefficients(weyl::simple_reflection(1, 2), TupleX::zero(2)), OutOfRange);
}

TEST_CASE("convention pinning") {
  const auto outcomes = evaluate_conventions();
  REQUIRE(outcomes.size() == 4);
  CHECK(outcomes[0].convention == Convention{1, 1});
  CHECK(outcomes[0].accepted());
  CHECK_FALSE(outcomes[1].accepted());
  CHECK_FALSE(outcomes[2].accepted());
  CHECK(outcomes[3].accepted());
  CHECK(pinned_convention() == Convention{1, 1});
  CHECK(shared_schubert_table(2).convention() == pinned_convention());
}

TEST_CASE("point class") {
  const auto p1 = point_class(1, pinned_convention());
  CHECK(p1 == TupleT(1, {L("1 - x1^2", 1), LaurentPoly(1)}));
  CHECK(check_T(p1).ok());
  const auto p2 = point_class(2, pinned_convention());
  const ring::BinomialDivisor euler({{1, -1}, {1, 1}, {2, 0}, {0, 2}});
  CHECK(p2[0] == euler.expand());  // (x^a - 1) = -(1 - x^a), four factors
  for (std::size_t w = 1; w < p2.size(); ++w) CHECK(p2[w].is_zero());
}

TEST_CASE("Demazure operator") {
  const Convention conv = pinned_convention();
  const auto c = TupleT::constant(2, L("x1 - 4*x2^3", 2));
  for (std::size_t i = 1; i <= 2; ++i) CHECK(demazure(i, c, conv) == c);
  CHECK(demazure(1, point_class(1, conv), conv) == TupleT::constant(1, L("1", 1)));
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto& table = shared_schubert_table(n);
    for (std::uint64_t t = 0; t < 10; ++t) {
      auto rng = sampling::trial_rng(34, t);
      const auto f = sampling::random_combination(rng, table, weyl::enumerate_W(n)).tuple;
      for (std::size_t i = 1; i <= n; ++i) {
        const auto once = demazure(i, f, conv);
        CHECK(check_T(once).ok());
        CHECK(demazure(i, once, conv) == once);
      }
    }
  }
  // A non-member makes some step inexact.
  CHECK_THROWS_AS(demazure(1, TupleT(1, {L("1", 1), L("x1", 1)}), conv), InexactDivision);
}

TEST_CASE("Schubert classes") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto& table = shared_schubert_table(n);
    const auto& W = weyl::enumerate_W(n);
    CHECK(table.at(weyl::longest_element(n)) == TupleT::constant(n, LaurentPoly::constant(n, 1)));
    CHECK(table.at(SignedPerm::identity(n)) == point_class(n, pinned_convention()));
    for (std::size_t w = 0; w < W.size(); ++w) {
      const auto r = check_T(table[w]);
      CHECK(r.ok());
      CHECK(r.checks == n * n * W.size());
      for (std::size_t v = 0; v < W.size(); ++v) {
        if (!weyl::bruhat_leq(W[v], W[w])) CHECK(table[w][v].is_zero());
      }
      CHECK_FALSE(table[w][w].is_zero());
    }
    CHECK(triangularity_check(table).ok());
    CHECK(lemma44_check(table).ok());
  }
}

TEST_CASE("Schubert classes do not depend on the reduced word") {
  const Convention conv = pinned_convention();
  const auto& table = shared_schubert_table(2);
  for (const auto& w : weyl::enumerate_W(2)) {
    std::vector<std::vector<std::size_t>> words;
    std::vector<std::size_t> suffix;
    reduced_words(w, suffix, words);
    CHECK_FALSE(words.empty());
    for (const auto& word : words) {
      CHECK(weyl::word_product(word, 2) == w);
      CHECK(schubert_from_word(word, 2, conv) == table.at(w));
    }
  }
  CHECK(schubert_class(weyl::longest_element(2)) == TupleT::constant(2, L("1", 2)));
}

TEST_CASE("descending length fixes classes") {
  // s_i . [O_w] = [O_w] whenever w s_i < w, checked directly.
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto& table = shared_schubert_table(n);
    const auto& W = weyl::enumerate_W(n);
    for (std::size_t w = 0; w < W.size(); ++w)
      for (std::size_t i = 1; i <= n; ++i) {
        const auto s = weyl::simple_reflection(i, n);
        if (weyl::length(W[w] * s) < weyl::length(W[w])) CHECK(act_on_indices(s, table[w]) == table[w]);
      }
  }
}

TEST_CASE("only the top class is fixed by every sign change") {
  // The classes at maximal-length coset representatives are not W_G-invariant
  // below the top; see the README. This pins the counterexample.
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto& table = shared_schubert_table(n);
    const auto& W = weyl::enumerate_W(n);
    for (std::size_t w = 0; w < W.size(); ++w) {
      bool invariant = true;
      for (const auto& v : weyl::enumerate_WG(n)) invariant = invariant && act_on_indices(v, table[w]) == table[w];
      CHECK(invariant == (W[w] == weyl::longest_element(n)));
    }
  }
  const auto rep = weyl::max_length_rep(Perm({1, 0}));
  CHECK(rep == SignedPerm::from_window({-2, -1}));
  const auto v = SignedPerm::from_window({-1, 2});
  const auto& f = shared_schubert_table(2).at(rep);
  const auto moved = act_on_indices(v, f);
  const auto at = SignedPerm::from_window({1, 2});
  CHECK(f.at(at) == L("-x1^2 + 1", 2));
  CHECK(moved.at(at).is_zero());
  CHECK(std::holds_alternative<NotInvariantTuple>(descend_pi(f)));
}

TEST_CASE("expansion in Schubert classes") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto& table = shared_schubert_table(n);
    const auto reps = max_length_reps(n);
    for (const auto& w : reps) {
      const auto r = expand_in_schubert(table.at(w), reps, table);
      REQUIRE(std::holds_alternative<std::map<SignedPerm, LaurentPoly>>(r));
      const auto& coeffs = std::get<std::map<SignedPerm, LaurentPoly>>(r);
      for (const auto& u : reps)
        CHECK(coefficient_or_zero(coeffs, u, n) == (u == w ? LaurentPoly::constant(n, 1) : LaurentPoly(n)));
    }
    for (std::uint64_t t = 0; t < 20; ++t) {
      auto rng = sampling::trial_rng(35, t);
      const auto combo = sampling::random_combination(rng, table, reps);
      const auto r = expand_in_schubert(combo.tuple, reps, table);
      REQUIRE(std::holds_alternative<std::map<SignedPerm, LaurentPoly>>(r));
      const auto& coeffs = std::get<std::map<SignedPerm, LaurentPoly>>(r);
      for (const auto& u : reps) CHECK(coefficient_or_zero(coeffs, u, n) == coefficient_or_zero(combo.coefficients, u, n));
    }
    // A lone component at e is outside the span of the top-heavy basis.
    TupleT spike = TupleT::zero(n);
    spike[0] = LaurentPoly::constant(n, 1);
    CHECK(std::holds_alternative<NotInSpan>(expand_in_schubert(spike, reps, table)));
  }
  // The full Schubert basis spans every member.
  auto rng = sampling::trial_rng(36, 0);
  const auto& table = shared_schubert_table(2);
  const auto combo = sampling::random_combination(rng, table, weyl::enumerate_W(2));
  CHECK(std::holds_alternative<std::map<SignedPerm, LaurentPoly>>(
      expand_in_schubert(combo.tuple, weyl::enumerate_W(2), table)));
}

TEST_CASE("pullback and descent") {
  const auto h = L("x1^2 - x1^-1", 1);
  CHECK(pullback_pi(TupleX::constant(1, h)) == TupleT::constant(1, h));
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      auto rng = sampling::trial_rng(37, t);
      const auto fx = sampling::random_x_tuple(rng, n);
      const auto ft = pullback_pi(fx);
      CHECK(check_T(ft).ok());
      for (const auto& v : weyl::enumerate_WG(n)) CHECK(act_on_indices(v, ft) == ft);
      const auto back = descend_pi(ft);
      REQUIRE(std::holds_alternative<TupleX>(back));
      CHECK(std::get<TupleX>(back) == fx);
    }
    // Orbit sums of members are invariant members and descend to members.
    const auto& table = shared_schubert_table(n);
    for (std::uint64_t t = 0; t < 5; ++t) {
      auto rng = sampling::trial_rng(38, t);
      const auto f = sampling::random_combination(rng, table, weyl::enumerate_W(n)).tuple;
      TupleT sum = TupleT::zero(n);
      for (const auto& v : weyl::enumerate_WG(n)) sum += act_on_indices(v, f);
      const auto d = descend_pi(sum);
      REQUIRE(std::holds_alternative<TupleX>(d));
      CHECK(check_X(std::get<TupleX>(d)).ok());
      CHECK(pullback_pi(std::get<TupleX>(d)) == sum);
    }
  }
}

TEST_CASE("G-model and its expansion") {
  const auto l1 = canonical_class_L(1, 2);
  CHECK(l1 == TupleG(2, {X("X1", 2), X("X2", 2)}));
  CHECK(check_G(l1).ok());
  CHECK(canonical_class_L(1, 1) == TupleG::constant(1, X("X1", 1)));
  const auto jx = j_expand(l1);
  CHECK(jx == TupleX(2, {L("x1 + x1^-1", 2), L("x2 + x2^-1", 2)}));
  CHECK(check_X(jx).ok());
  CHECK(j_expand(TupleG::constant(2, X("3", 2))) == TupleX::constant(2, L("3", 2)));
  CHECK(std::holds_alternative<NotCoeffInvariant>(j_descend(TupleX::constant(2, L("x2", 2)))));
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = sampling::trial_rng(39, t);
    const auto g = sampling::random_g_tuple(rng, 3);
    const auto back = j_descend(j_expand(g));
    REQUIRE(std::holds_alternative<TupleG>(back));
    CHECK(std::get<TupleG>(back) == g);
    CHECK(check_G(g).ok() == check_X(j_expand(g)).ok());
    auto bad = g;
    sampling::mutate(rng, bad, 1);
    CHECK_FALSE(check_G(bad).ok());
    CHECK_FALSE(check_X(j_expand(bad)).ok());
  }
}

TEST_CASE("presentation relations") {
  for (std::size_t n = 1; n <= 3; ++n) CHECK(presentation_check(n).ok());
  // sigma_1 of the line classes at n = 2 is the constant X1 + X2.
  CHECK(canonical_class_L(1, 2) + canonical_class_L(2, 2) == TupleG::constant(2, X("X1 + X2", 2)));
  CHECK(canonical_class_L(1, 2) * canonical_class_L(2, 2) == TupleG::constant(2, X("X1*X2", 2)));
}

TEST_CASE("divisibility bridge between the G- and X-models") {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto& pairs = GroupTables::of(n).pairs();
    for (std::uint64_t t = 0; t < 40; ++t) {
      auto rng = sampling::trial_rng(40, t);
      const auto [mu, nu] = pairs[t % pairs.size()];
      const auto g = sampling::random_xpoly(rng, n, {4, 3, 7});
      const auto f = g * (XPoly::variable(n, mu) - XPoly::variable(n, nu));
      const auto yes = lemma53_bridge(f, mu, nu);
      CHECK(yes.x_divisible);
      CHECK(yes.t_divisible);
      CHECK(yes.quotients_agree);
      const auto no = lemma53_bridge(f + XPoly::monomial(n, ring::Exponents(n, 0), 1 + static_cast<int>(t % 5)), mu, nu);
      CHECK_FALSE(no.x_divisible);
      CHECK_FALSE(no.t_divisible);
    }
  }
}
