#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <variant>
#include <vector>

#include "qflagk/ring.hpp"
#include "qflagk/sampling.hpp"

using namespace qflagk;
using namespace qflagk::ring;

namespace {

using Q = boost::multiprecision::cpp_rational;

LaurentPoly L(const char* s, std::size_t n) { return parse_laurent(s, n); }
XPoly X(const char* s, std::size_t n) { return parse_xpoly(s, n); }

// Evaluation at a rational point; a ring homomorphism, so it checks
// arithmetic without going through the term map.
template <Variables V>
Q evaluate(const Polynomial<V>& f, const std::vector<Q>& point) {
  Q total = 0;
  for (const auto& [e, c] : f.terms()) {
    Q term = Q(c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      const int k = e[v] < 0 ? -e[v] : e[v];
      for (int r = 0; r < k; ++r) {
        if (e[v] < 0)
          term /= point[v];
        else
          term *= point[v];
      }
    }
    total += term;
  }
  return total;
}

std::vector<Q> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 7);
  std::vector<Q> p;
  for (std::size_t v = 0; v < n; ++v) p.emplace_back(num(rng), den(rng));
  return p;
}

}  // namespace

TEST_CASE("addition examples") {
  CHECK((L("x1", 1) + L("-x1", 1)).is_zero());
  CHECK(L("x1 + x1^-1", 1) + LaurentPoly(1) == L("x1 + x1^-1", 1));
  CHECK(L("x1*x2^-1", 2) + L("x1*x2^-1", 2) == L("2*x1*x2^-1", 2));
}

TEST_CASE("multiplication examples") {
  const auto product = L("x1^-1", 2) * L("x1*x2^-1 - 1", 2) * L("x1*x2 - 1", 2);
  CHECK(product == L("x1 - x2 - x2^-1 + x1^-1", 2));
  const auto f = L("3*x1^2*x2^-1 - x2", 2);
  CHECK(f * LaurentPoly::constant(2, 1) == f);
  CHECK(L("x1 + x1^-1", 1) * L("x1 - x1^-1", 1) == L("x1^2 - x1^-2", 1));
}

TEST_CASE("rank mismatch is rejected") {
  CHECK_THROWS_AS(L("x1", 1) + L("x1", 2), RankMismatch);
  CHECK_THROWS_AS(XPoly::monomial(1, {-1}), Error);
}

TEST_CASE("canonical order is graded lexicographic, largest first") {
  const auto f = L("1 + x2 + x1 + x1*x2 + x1^2*x2^-1", 2);
  std::vector<Exponents> order;
  for (const auto& [e, c] : f.terms()) order.push_back(e);
  // Total degree 2 (x1*x2), then degree 1 terms by first differing exponent.
  CHECK(order.front() == Exponents{1, 1});
  CHECK(order.back() == Exponents{0, 0});
  CHECK(to_string(f) == "x1*x2 + x1^2*x2^-1 + x1 + x2 + 1");
}

TEST_CASE("text round trip") {
  for (const char* s : {"0", "1", "-x1", "2*x1^2*x2^-1 - x1 + 3", "x1^-3*x2^4"}) {
    const auto f = L(s, 2);
    CHECK(parse_laurent(to_string(f), 2) == f);
  }
  CHECK(to_string(X("X1^2 - 2*X1*X2 + 7", 2)) == "X1^2 - 2*X1*X2 + 7");
  CHECK_THROWS_AS(parse_laurent("x3", 2), ParseError);
  CHECK_THROWS_AS(parse_laurent("x1 x2", 2), ParseError);
  CHECK_THROWS_AS(parse_laurent("", 2), ParseError);
  CHECK_THROWS_AS(parse_xpoly("X1^-1", 1), Error);
}

TEST_CASE("arithmetic agrees with evaluation at random points") {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    auto rng = sampling::trial_rng(11, trial);
    const auto f = sampling::random_laurent(rng, 2, {4, 3, 6});
    const auto g = sampling::random_laurent(rng, 2, {4, 3, 6});
    const auto p = random_point(rng, 2);
    CHECK(evaluate(f + g, p) == evaluate(f, p) + evaluate(g, p));
    CHECK(evaluate(f - g, p) == evaluate(f, p) - evaluate(g, p));
    CHECK(evaluate(f * g, p) == evaluate(f, p) * evaluate(g, p));
  }
}

TEST_CASE("binomial division examples") {
  const BinomialDivisor d({{1, -1}, {1, 1}});
  auto q = divide_exact(L("x1 - x2 - x2^-1 + x1^-1", 2), d);
  REQUIRE(std::holds_alternative<LaurentPoly>(q));
  CHECK(std::get<LaurentPoly>(q) == L("x1^-1", 2));

  auto zero = divide_exact(LaurentPoly(2), d);
  REQUIRE(std::holds_alternative<LaurentPoly>(zero));
  CHECK(std::get<LaurentPoly>(zero).is_zero());

  auto bad = divide_exact(L("x1 - 1", 2), BinomialDivisor({{1, 1}}));
  REQUIRE(std::holds_alternative<NotDivisible<LaurentPoly>>(bad));
  CHECK_FALSE(std::get<NotDivisible<LaurentPoly>>(bad).remainder.is_zero());
}

TEST_CASE("binomial division inverts multiplication") {
  const std::vector<std::vector<Exponents>> divisors = {
      {{2, 0}}, {{1, -1}}, {{1, -1}, {1, 1}}, {{2, 0}, {0, 2}, {1, 1}}, {{0, 1}, {1, -1}, {2, 0}, {1, 1}}};
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    auto rng = sampling::trial_rng(12, trial);
    const auto& factors = divisors[trial % divisors.size()];
    const BinomialDivisor d(factors);
    const auto a = sampling::random_laurent(rng, 2, {5, 3, 9});
    const auto f = a * d.expand();
    auto q = divide_exact(f, d);
    REQUIRE(std::holds_alternative<LaurentPoly>(q));
    CHECK(std::get<LaurentPoly>(q) == a);

    // Adding a constant breaks divisibility: every binomial vanishes at 1.
    auto r = divide_exact(f + LaurentPoly::constant(2, 1), d);
    CHECK(std::holds_alternative<NotDivisible<LaurentPoly>>(r));
  }
}

TEST_CASE("substitution examples") {
  const std::vector<MonomialImage> x1_to_x2 = {{1, {0, 1}}, {1, {0, 1}}};
  CHECK(substitute(L("x1*x2^-1 - 1", 2), x1_to_x2).is_zero());
  const std::vector<MonomialImage> identity = {{1, {1, 0}}, {1, {0, 1}}};
  CHECK(substitute(L("x1", 2), identity) == L("x1", 2));
  const std::vector<MonomialImage> inverse = {{1, {0, -1}}, {1, {0, 1}}};
  CHECK(substitute(L("x1*x2 - 1", 2), inverse).is_zero());
  const std::vector<MonomialImage> negate = {{-1, {1, 0}}, {1, {0, 1}}};
  CHECK(substitute(L("x1^3 + x1^2", 2), negate) == L("-x1^3 + x1^2", 2));
}

TEST_CASE("x_expand examples") {
  CHECK(x_expand(X("X1", 1)) == L("x1 + x1^-1", 1));
  CHECK(x_expand(XPoly::constant(1, 1)) == LaurentPoly::constant(1, 1));
  CHECK(x_expand(X("X1*X2", 2)) == L("x1*x2 + x1*x2^-1 + x1^-1*x2 + x1^-1*x2^-1", 2));
}

TEST_CASE("basis decomposition") {
  auto d = basis_decompose(L("x1", 1));
  CHECK(d.size() == 2);
  CHECK(d.at({0}) == X("X1", 1));
  CHECK(d.at({-1}) == X("-1", 1));

  d = basis_decompose(L("x1^-1", 1));
  CHECK(d.at({0}).is_zero());
  CHECK(d.at({-1}) == X("1", 1));

  const auto g = X("X1^2*X2 - 3*X2 + 1", 2);
  d = basis_decompose(x_expand(g));
  CHECK(d.size() == 4);
  for (const auto& [eps, c] : d) CHECK(c == (eps == Exponents{0, 0} ? g : XPoly(2)));
}

TEST_CASE("basis decomposition reconstructs random polynomials") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    auto rng = sampling::trial_rng(13, trial);
    const std::size_t n = 1 + trial % 3;
    const auto f = sampling::random_laurent(rng, n, {6, 3, 9});
    LaurentPoly back(n);
    for (const auto& [eps, c] : basis_decompose(f)) back += x_expand(c) * LaurentPoly::monomial(n, eps);
    CHECK(back == f);
  }
}

TEST_CASE("sym_in_x") {
  auto r = sym_in_x(L("x1 + x1^-1", 1));
  REQUIRE(std::holds_alternative<XPoly>(r));
  CHECK(std::get<XPoly>(r) == X("X1", 1));
  r = sym_in_x(L("x1*x2 + x1*x2^-1 + x1^-1*x2 + x1^-1*x2^-1", 2));
  REQUIRE(std::holds_alternative<XPoly>(r));
  CHECK(std::get<XPoly>(r) == X("X1*X2", 2));
  CHECK(std::holds_alternative<NotInvariant>(sym_in_x(L("x1", 1))));

  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    auto rng = sampling::trial_rng(14, trial);
    const auto g = sampling::random_xpoly(rng, 3, {5, 3, 9});
    auto back = sym_in_x(x_expand(g));
    REQUIRE(std::holds_alternative<XPoly>(back));
    CHECK(std::get<XPoly>(back) == g);
  }
}

TEST_CASE("elementary symmetric polynomials") {
  const std::vector<XPoly> xs = {X("X1", 2), X("X2", 2)};
  CHECK(elementary_symmetric<XPoly>(1, xs) == X("X1 + X2", 2));
  CHECK(elementary_symmetric<XPoly>(2, xs) == X("X1*X2", 2));
  const auto a = L("x1 - x2^-1", 2);
  const std::vector<LaurentPoly> triple = {a, a, a};
  CHECK(elementary_symmetric<LaurentPoly>(2, triple) == (a * a).scaled(3));
  CHECK_THROWS(elementary_symmetric<XPoly>(3, xs));
}

TEST_CASE("X-division examples") {
  auto q = divide_exact(X("X1^2 - X2^2", 2), 0, 1);
  REQUIRE(std::holds_alternative<XPoly>(q));
  CHECK(std::get<XPoly>(q) == X("X1 + X2", 2));
  q = divide_exact(XPoly(2), 0, 1);
  REQUIRE(std::holds_alternative<XPoly>(q));
  CHECK(std::get<XPoly>(q).is_zero());
  CHECK(std::holds_alternative<NotDivisible<XPoly>>(divide_exact(X("X1", 2), 0, 1)));
}

TEST_CASE("X-division inverts multiplication") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    auto rng = sampling::trial_rng(15, trial);
    const auto g = sampling::random_xpoly(rng, 3, {5, 3, 9});
    const std::size_t mu = trial % 2, nu = 2;
    const auto diff = XPoly::variable(3, mu) - XPoly::variable(3, nu);
    auto q = divide_exact(g * diff, mu, nu);
    REQUIRE(std::holds_alternative<XPoly>(q));
    CHECK(std::get<XPoly>(q) == g);
  }
}
