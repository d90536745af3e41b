#include "qflagk/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qflagk::ring {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// Polynomial

template <Variables V>
Polynomial<V> Polynomial<V>::constant(std::size_t rank, const BigInt& c) {
  Polynomial p(rank);
  p.add_term(Exponents(rank, 0), c);
  return p;
}

template <Variables V>
Polynomial<V> Polynomial<V>::monomial(std::size_t rank, Exponents e, const BigInt& c) {
  if (e.size() != rank) throw RankMismatch("monomial exponent length differs from rank");
  Polynomial p(rank);
  p.add_term(e, c);
  return p;
}

template <Variables V>
Polynomial<V> Polynomial<V>::variable(std::size_t rank, std::size_t index) {
  if (index >= rank) throw OutOfRange("variable index out of range");
  Exponents e(rank, 0);
  e[index] = 1;
  return monomial(rank, std::move(e));
}

template <Variables V>
BigInt Polynomial<V>::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

template <Variables V>
void Polynomial<V>::check_exponents(const Exponents& e) const {
  if (e.size() != rank_) throw RankMismatch("exponent length differs from rank");
  if constexpr (V == Variables::X) {
    if (std::any_of(e.begin(), e.end(), [](int a) { return a < 0; }))
      throw OutOfRange("negative exponent in an X-polynomial");
  }
}

template <Variables V>
void Polynomial<V>::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  check_exponents(e);
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

template <Variables V>
void Polynomial<V>::check_rank(const Polynomial& g) const {
  if (rank_ != g.rank_) throw RankMismatch("polynomial ranks differ");
}

template <Variables V>
Polynomial<V>& Polynomial<V>::operator+=(const Polynomial& g) {
  check_rank(g);
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

template <Variables V>
Polynomial<V>& Polynomial<V>::operator-=(const Polynomial& g) {
  check_rank(g);
  for (const auto& [e, c] : g.terms_) add_term(e, -c);
  return *this;
}

template <Variables V>
Polynomial<V>& Polynomial<V>::operator*=(const Polynomial& g) {
  check_rank(g);
  Polynomial r(rank_);
  Exponents e(rank_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : g.terms_) {
      for (std::size_t i = 0; i < rank_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  *this = std::move(r);
  return *this;
}

template <Variables V>
Polynomial<V> Polynomial<V>::scaled(const BigInt& c) const {
  Polynomial r(rank_);
  if (c == 0) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
  return r;
}

template <Variables V>
Polynomial<V> Polynomial<V>::shifted(const Exponents& s) const {
  if (s.size() != rank_) throw RankMismatch("shift length differs from rank");
  Polynomial r(rank_);
  Exponents e(rank_);
  for (const auto& [ea, c] : terms_) {
    for (std::size_t i = 0; i < rank_; ++i) e[i] = ea[i] + s[i];
    r.add_term(e, c);
  }
  return r;
}

template class Polynomial<Variables::Laurent>;
template class Polynomial<Variables::X>;

// ---------------------------------------------------------------------------
// Binomial divisors

BinomialDivisor::BinomialDivisor(std::vector<Exponents> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& m = factors_[i];
    if (m.size() != factors_.front().size()) throw RankMismatch("divisor factors differ in rank");
    if (std::all_of(m.begin(), m.end(), [](int a) { return a == 0; }))
      throw OutOfRange("binomial factor with trivial monomial");
    for (std::size_t j = 0; j < i; ++j)
      if (factors_[j] == m) throw OutOfRange("repeated binomial factor");
  }
}

std::size_t BinomialDivisor::rank() const {
  return factors_.empty() ? 0 : factors_.front().size();
}

LaurentPoly BinomialDivisor::expand() const {
  const std::size_t n = rank();
  LaurentPoly r = LaurentPoly::constant(n, 1);
  for (const auto& m : factors_) {
    LaurentPoly b = LaurentPoly::monomial(n, m);
    b.add_term(Exponents(n, 0), -1);
    r *= b;
  }
  return r;
}

namespace {

// Orders terms by the exponent of one chosen variable first, so that the
// largest and smallest degrees in that variable sit at the ends of the map.
Exponents lead_with(const Exponents& e, std::size_t k) {
  Exponents key;
  key.reserve(e.size() + 1);
  key.push_back(e[k]);
  key.insert(key.end(), e.begin(), e.end());
  return key;
}

Exponents strip_lead(const Exponents& key) { return Exponents(key.begin() + 1, key.end()); }

void accumulate(std::map<Exponents, BigInt>& work, Exponents key, const BigInt& c) {
  auto [it, inserted] = work.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) work.erase(it);
  }
}

// f / (x^m - 1). Treat f as a Laurent polynomial in x_k (first variable with
// a nonzero exponent in m) with coefficients in the others; the leading
// coefficient of x^m - 1 in x_k is a unit, so Euclidean reduction applies and
// the remainder is zero iff the division is exact.
DivisionResult<LaurentPoly> divide_by_binomial(const LaurentPoly& f, const Exponents& m) {
  const std::size_t n = f.rank();
  if (m.size() != n) throw RankMismatch("divisor rank differs from polynomial rank");
  std::size_t k = 0;
  while (k < n && m[k] == 0) ++k;
  if (k == n) throw OutOfRange("binomial factor with trivial monomial");

  // x^m - 1 = -x^m (x^{-m} - 1); reduce by the form whose x_k-degree is positive.
  const bool flipped = m[k] < 0;
  Exponents step = m;
  if (flipped)
    for (int& a : step) a = -a;
  const int span = step[k];

  std::map<Exponents, BigInt> work;
  for (const auto& [e, c] : f.terms()) work.emplace(lead_with(e, k), c);

  LaurentPoly q(n);
  while (!work.empty()) {
    const int hi = work.rbegin()->first.front();
    const int lo = work.begin()->first.front();
    if (hi - lo < span) break;
    auto top = std::prev(work.end());
    Exponents e = strip_lead(top->first);
    const BigInt c = top->second;
    work.erase(top);
    for (std::size_t i = 0; i < n; ++i) e[i] -= step[i];
    q.add_term(e, c);
    accumulate(work, lead_with(e, k), c);
  }

  if (!work.empty()) {
    LaurentPoly rem(n);
    for (const auto& [key, c] : work) rem.add_term(strip_lead(key), c);
    return NotDivisible<LaurentPoly>{0, std::move(rem)};
  }
  if (flipped) return q.shifted(step).scaled(-1);
  return q;
}

}  // namespace

DivisionResult<LaurentPoly> divide_exact(const LaurentPoly& f, const BinomialDivisor& d) {
  if (!d.factors().empty() && d.rank() != f.rank())
    throw RankMismatch("divisor rank differs from polynomial rank");
  LaurentPoly q = f;
  for (std::size_t i = 0; i < d.factors().size(); ++i) {
    if (q.is_zero()) break;
    auto r = divide_by_binomial(q, d.factors()[i]);
    if (auto* fail = std::get_if<NotDivisible<LaurentPoly>>(&r)) {
      fail->factor = i;
      return r;
    }
    q = std::get<LaurentPoly>(std::move(r));
  }
  return q;
}

DivisionResult<XPoly> divide_exact(const XPoly& f, std::size_t mu, std::size_t nu) {
  const std::size_t n = f.rank();
  if (mu >= n || nu >= n) throw OutOfRange("variable index out of range");
  if (mu == nu) throw OutOfRange("X_mu - X_nu needs distinct indices");

  std::map<Exponents, BigInt> work;
  for (const auto& [e, c] : f.terms()) work.emplace(lead_with(e, mu), c);

  // Synthetic division in X_mu; the divisor is monic there.
  XPoly q(n);
  while (!work.empty() && work.rbegin()->first.front() > 0) {
    auto top = std::prev(work.end());
    Exponents e = strip_lead(top->first);
    const BigInt c = top->second;
    work.erase(top);
    e[mu] -= 1;
    q.add_term(e, c);
    e[nu] += 1;
    accumulate(work, lead_with(e, mu), c);
  }
  if (!work.empty()) {
    XPoly rem(n);
    for (const auto& [key, c] : work) rem.add_term(strip_lead(key), c);
    return NotDivisible<XPoly>{0, std::move(rem)};
  }
  return q;
}

// ---------------------------------------------------------------------------
// Substitution and the X <-> x bridge

LaurentPoly substitute(const LaurentPoly& f, std::span<const MonomialImage> assignment) {
  const std::size_t n = f.rank();
  if (assignment.size() != n) throw RankMismatch("assignment length differs from rank");
  for (const auto& img : assignment) {
    if (img.exponents.size() != n) throw RankMismatch("assignment image rank differs");
    if (img.sign != 1 && img.sign != -1) throw OutOfRange("assignment sign must be +-1");
  }
  LaurentPoly r(n);
  Exponents e(n);
  for (const auto& [ea, c] : f.terms()) {
    std::fill(e.begin(), e.end(), 0);
    int sign = 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (ea[v] == 0) continue;
      if (assignment[v].sign < 0 && (ea[v] % 2 != 0)) sign = -sign;
      for (std::size_t i = 0; i < n; ++i) e[i] += ea[v] * assignment[v].exponents[i];
    }
    r.add_term(e, sign > 0 ? c : BigInt(-c));
  }
  return r;
}

namespace {

std::vector<BigInt> binomial_row(int k) {
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 1);
  for (int i = 1; i < k; ++i) row[i] = row[i - 1] * (k - i + 1) / i;
  return row;
}

// (x_v + x_v^{-1})^k
LaurentPoly x_power(std::size_t n, std::size_t v, int k) {
  LaurentPoly r(n);
  const auto row = binomial_row(k);
  Exponents e(n, 0);
  for (int i = 0; i <= k; ++i) {
    e[v] = k - 2 * i;
    r.add_term(e, row[i]);
  }
  return r;
}

}  // namespace

LaurentPoly x_expand(const XPoly& g) {
  const std::size_t n = g.rank();
  LaurentPoly r(n);
  for (const auto& [e, c] : g.terms()) {
    LaurentPoly t = LaurentPoly::constant(n, c);
    for (std::size_t v = 0; v < n; ++v)
      if (e[v] > 0) t *= x_power(n, v, e[v]);
    r += t;
  }
  return r;
}

namespace {

// Rank-one step: R[x, x^{-1}] is free over R[X] on {1, x^{-1}}. `f` maps an
// x-degree to its coefficient in R. On return f is empty and `ones[k]`,
// `inverses[k]` hold the R-coefficients of X^k and X^k x^{-1}.
void rank_one_reduce(std::map<int, LaurentPoly> f, std::map<int, LaurentPoly>& ones,
                     std::map<int, LaurentPoly>& inverses) {
  auto subtract = [&f](int degree, const LaurentPoly& c) {
    auto [it, inserted] = f.try_emplace(degree, c.scaled(-1));
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) f.erase(it);
    }
  };
  auto add_to = [](std::map<int, LaurentPoly>& m, int k, const LaurentPoly& c) {
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) it->second += c;
  };
  while (!f.empty()) {
    const int hi = f.rbegin()->first;
    const int lo = f.begin()->first;
    if (hi >= -lo) {
      // Kill the top term with c * X^hi, whose x-support is [-hi, hi].
      const LaurentPoly c = f.rbegin()->second;
      add_to(ones, hi, c);
      const auto row = binomial_row(hi);
      for (int i = 0; i <= hi; ++i) subtract(hi - 2 * i, c.scaled(row[i]));
    } else {
      // Kill the bottom term with c * X^k x^{-1}, support [-k-1, k-1].
      const LaurentPoly c = f.begin()->second;
      const int k = -lo - 1;
      add_to(inverses, k, c);
      const auto row = binomial_row(k);
      for (int i = 0; i <= k; ++i) subtract(k - 2 * i - 1, c.scaled(row[i]));
    }
  }
}

}  // namespace

std::map<Exponents, XPoly> basis_decompose(const LaurentPoly& f) {
  const std::size_t n = f.rank();
  // (eps prefix, X-exponent prefix) -> residual coefficient in the remaining variables
  using Key = std::pair<Exponents, Exponents>;
  std::map<Key, LaurentPoly> state;
  state.emplace(Key{}, f);

  for (std::size_t v = 0; v < n; ++v) {
    std::map<Key, LaurentPoly> next;
    for (const auto& [key, poly] : state) {
      std::map<int, LaurentPoly> by_degree;
      for (const auto& [e, c] : poly.terms()) {
        Exponents rest = e;
        rest[v] = 0;
        auto [it, inserted] = by_degree.try_emplace(e[v], n);
        it->second.add_term(rest, c);
      }
      std::map<int, LaurentPoly> ones, inverses;
      rank_one_reduce(std::move(by_degree), ones, inverses);
      auto emit = [&](const std::map<int, LaurentPoly>& part, int eps) {
        for (const auto& [k, c] : part) {
          if (c.is_zero()) continue;
          Key child = key;
          child.first.push_back(eps);
          child.second.push_back(k);
          auto [it, inserted] = next.try_emplace(child, c);
          if (!inserted) it->second += c;
        }
      };
      emit(ones, 0);
      emit(inverses, -1);
    }
    state = std::move(next);
  }

  std::map<Exponents, XPoly> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Exponents eps(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) eps[v] = -1;
    out.emplace(std::move(eps), XPoly(n));
  }
  const Exponents zero(n, 0);
  for (const auto& [key, residual] : state) out.at(key.first).add_term(key.second, residual.coefficient(zero));
  return out;
}

std::variant<XPoly, NotInvariant> sym_in_x(const LaurentPoly& f) {
  const std::size_t n = f.rank();
  auto parts = basis_decompose(f);
  bool invariant = true;
  for (const auto& [eps, c] : parts) {
    const bool trivial = std::all_of(eps.begin(), eps.end(), [](int a) { return a == 0; });
    if (!trivial && !c.is_zero()) invariant = false;
  }
  if (invariant) return parts.at(Exponents(n, 0));

  std::vector<MonomialImage> flip(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      flip[i].sign = 1;
      flip[i].exponents.assign(n, 0);
      flip[i].exponents[i] = (i == v) ? -1 : 1;
    }
    if (substitute(f, flip) != f) return NotInvariant{v};
  }
  throw Error("basis decomposition and sign-change test disagree");
}

template <class Poly>
Poly elementary_symmetric(int k, std::span<const Poly> args) {
  if (args.empty() || k < 1 || static_cast<std::size_t>(k) > args.size())
    throw OutOfRange("elementary symmetric index out of range");
  const std::size_t n = args.front().rank();
  // e[j] after processing a prefix of the arguments.
  std::vector<Poly> e(static_cast<std::size_t>(k) + 1, Poly(n));
  e[0] = Poly::constant(n, 1);
  for (const auto& a : args) {
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * a;
  }
  return e[k];
}

template LaurentPoly elementary_symmetric(int, std::span<const LaurentPoly>);
template XPoly elementary_symmetric(int, std::span<const XPoly>);

// ---------------------------------------------------------------------------
// Text form

namespace {

template <Variables V>
std::string format(const Polynomial<V>& f, char letter) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    bool wrote = false;
    const bool constant = std::all_of(e.begin(), e.end(), [](int a) { return a == 0; });
    if (mag != 1 || constant) {
      out << mag;
      wrote = true;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (wrote) out << '*';
      out << letter << (v + 1);
      if (e[v] != 1) out << '^' << e[v];
      wrote = true;
    }
  }
  return out.str();
}

class TermParser {
 public:
  TermParser(std::string_view text, std::size_t rank, char letter)
      : text_(text), rank_(rank), letter_(letter) {}

  template <Variables V>
  Polynomial<V> parse() {
    Polynomial<V> out(rank_);
    skip();
    if (pos_ == text_.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      BigInt coeff = 1;
      Exponents e(rank_, 0);
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = BigInt(digits());
        skip();
        if (peek() == '*') {
          ++pos_;
          skip();
          variable(e);
        }
      } else {
        variable(e);
      }
      skip();
      while (peek() == '*') {
        ++pos_;
        skip();
        variable(e);
        skip();
      }
      out.add_term(e, sign < 0 ? BigInt(-coeff) : coeff);
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  void variable(Exponents& e) {
    if (peek() != letter_) fail(std::string("expected variable '") + letter_ + "'");
    ++pos_;
    const long index = std::stol(digits());
    if (index < 1 || static_cast<std::size_t>(index) > rank_) fail("variable index out of range");
    long power = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      power = std::stol(digits());
      if (neg) power = -power;
    }
    e[static_cast<std::size_t>(index - 1)] += static_cast<int>(power);
  }

  std::string_view text_;
  std::size_t rank_;
  char letter_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const LaurentPoly& f) { return format(f, 'x'); }
std::string to_string(const XPoly& f) { return format(f, 'X'); }

LaurentPoly parse_laurent(std::string_view text, std::size_t rank) {
  return TermParser(text, rank, 'x').parse<Variables::Laurent>();
}

XPoly parse_xpoly(std::string_view text, std::size_t rank) {
  try {
    return TermParser(text, rank, 'X').parse<Variables::X>();
  } catch (const OutOfRange& e) {
    throw ParseError(e.what());
  }
}

}  // namespace qflagk::ring
