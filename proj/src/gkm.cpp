#include "qflagk/gkm.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace qflagk::gkm {

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= k;
  return r;
}

ring::Exponents simple_root(std::size_t i, std::size_t n) {
  ring::Exponents e(n, 0);
  if (i < n) {
    e[i - 1] = 1;
    e[i] = -1;
  } else {
    e[n - 1] = 2;
  }
  return e;
}

std::string pair_label(std::size_t mu, std::size_t nu) {
  return "(" + std::to_string(mu + 1) + "," + std::to_string(nu + 1) + ")";
}

void check_tuple_rank(std::size_t expected, std::size_t actual) {
  if (expected != actual) throw RankMismatch("tuple ranks differ");
}

}  // namespace

const char* model_name(Model m) {
  switch (m) {
    case Model::T: return "T";
    case Model::X: return "X";
    case Model::G: return "G";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// GroupTables

GroupTables::GroupTables(std::size_t n)
    : n_(n), w_(weyl::enumerate_W(n)), s_(weyl::enumerate_S(n)), roots_(weyl::positive_roots(n)) {
  lengths_.reserve(w_.size());
  for (const auto& w : w_) lengths_.push_back(weyl::length(w));

  right_simple_.assign(n, std::vector<std::size_t>(w_.size()));
  for (std::size_t i = 1; i <= n; ++i) {
    const SignedPerm s = weyl::simple_reflection(i, n);
    for (std::size_t k = 0; k < w_.size(); ++k) right_simple_[i - 1][k] = weyl::index_of(w_[k] * s);
  }

  left_reflection_.assign(roots_.size(), std::vector<std::size_t>(w_.size()));
  for (std::size_t a = 0; a < roots_.size(); ++a) {
    const SignedPerm r = weyl::reflection(roots_[a]);
    for (std::size_t k = 0; k < w_.size(); ++k) left_reflection_[a][k] = weyl::index_of(r * w_[k]);
  }

  coset_.reserve(w_.size());
  for (const auto& w : w_) coset_.push_back(weyl::index_of(weyl::coset_map(w)));

  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = mu + 1; nu < n; ++nu) pairs_.emplace_back(mu, nu);
  left_transposition_.assign(pairs_.size(), std::vector<std::size_t>(s_.size()));
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    const Perm t = Perm::transposition(n, pairs_[p].first, pairs_[p].second);
    for (std::size_t k = 0; k < s_.size(); ++k) left_transposition_[p][k] = weyl::index_of(t * s_[k]);
  }

  by_length_.resize(w_.size());
  for (std::size_t k = 0; k < w_.size(); ++k) by_length_[k] = k;
  std::stable_sort(by_length_.begin(), by_length_.end(),
                   [this](std::size_t a, std::size_t b) { return lengths_[a] < lengths_[b]; });
}

const GroupTables& GroupTables::of(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<GroupTables>> cache;
  if (n == 0) throw OutOfRange("rank must be positive");
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot.reset(new GroupTables(n));
  return *slot;
}

// ---------------------------------------------------------------------------
// Tuple

template <Model M>
Tuple<M>::Tuple(std::size_t rank, std::vector<Poly> values) : rank_(rank), values_(std::move(values)) {
  if (values_.size() != vertex_count(rank))
    throw RankMismatch("tuple has " + std::to_string(values_.size()) + " entries, expected " +
                       std::to_string(vertex_count(rank)));
  for (const auto& v : values_)
    if (v.rank() != rank) throw RankMismatch("tuple entry has the wrong rank");
}

template <Model M>
Tuple<M> Tuple<M>::constant(std::size_t rank, const Poly& c) {
  return Tuple(rank, std::vector<Poly>(vertex_count(rank), c));
}

template <Model M>
std::size_t Tuple<M>::vertex_count(std::size_t rank) {
  if constexpr (M == Model::T)
    return factorial(rank) << rank;
  else
    return factorial(rank);
}

template <Model M>
typename Tuple<M>::Key Tuple<M>::key(std::size_t rank, std::size_t index) {
  const auto& g = GroupTables::of(rank);
  if constexpr (M == Model::T)
    return g.W().at(index);
  else
    return g.S().at(index);
}

template <Model M>
const typename Tuple<M>::Poly& Tuple<M>::at(const Key& k) const {
  if (k.size() != rank_) throw RankMismatch("key rank differs from tuple rank");
  return values_[weyl::index_of(k)];
}

template <Model M>
Tuple<M>& Tuple<M>::operator+=(const Tuple& g) {
  check_tuple_rank(rank_, g.rank_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += g.values_[i];
  return *this;
}

template <Model M>
Tuple<M>& Tuple<M>::operator-=(const Tuple& g) {
  check_tuple_rank(rank_, g.rank_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= g.values_[i];
  return *this;
}

template <Model M>
Tuple<M> Tuple<M>::times(const Tuple& g) const {
  check_tuple_rank(rank_, g.rank_);
  Tuple r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] *= g.values_[i];
  return r;
}

template <Model M>
Tuple<M> Tuple<M>::scaled(const Poly& c) const {
  Tuple r = *this;
  for (auto& v : r.values_) v *= c;
  return r;
}

template class Tuple<Model::T>;
template class Tuple<Model::X>;
template class Tuple<Model::G>;

// ---------------------------------------------------------------------------
// Edge conditions

CheckResult check_T(const TupleT& f) {
  const auto& g = GroupTables::of(f.rank());
  CheckResult result;
  for (std::size_t a = 0; a < g.roots().size(); ++a) {
    const ring::BinomialDivisor d({g.roots()[a].weight()});
    for (std::size_t w = 0; w < f.size(); ++w) {
      const std::size_t v = g.left_reflection(a, w);
      ++result.checks;
      const LaurentPoly diff = f[w] - f[v];
      if (diff.is_zero()) continue;
      const auto q = ring::divide_exact(diff, d);
      if (const auto* bad = std::get_if<ring::NotDivisible<LaurentPoly>>(&q))
        result.violations.push_back({weyl::to_string(g.W()[w]), weyl::to_string(g.W()[v]),
                                     weyl::to_string(g.roots()[a].weight()), ring::to_string(bad->remainder)});
    }
  }
  return result;
}

CheckResult check_X(const TupleX& f) {
  const std::size_t n = f.rank();
  const auto& g = GroupTables::of(n);
  CheckResult result;
  for (std::size_t p = 0; p < g.pairs().size(); ++p) {
    const auto [mu, nu] = g.pairs()[p];
    ring::Exponents minus(n, 0), plus(n, 0);
    minus[mu] = 1;
    minus[nu] = -1;
    plus[mu] = 1;
    plus[nu] = 1;
    const ring::BinomialDivisor d({minus, plus});
    for (std::size_t t = 0; t < f.size(); ++t) {
      const std::size_t u = g.left_transposition(p, t);
      ++result.checks;
      const LaurentPoly diff = f[t] - f[u];
      if (diff.is_zero()) continue;
      const auto q = ring::divide_exact(diff, d);
      if (const auto* bad = std::get_if<ring::NotDivisible<LaurentPoly>>(&q))
        result.violations.push_back({weyl::to_string(g.S()[t]), weyl::to_string(g.S()[u]), pair_label(mu, nu),
                                     ring::to_string(bad->remainder)});
    }
  }
  return result;
}

CheckResult check_G(const TupleG& f) {
  const auto& g = GroupTables::of(f.rank());
  CheckResult result;
  for (std::size_t p = 0; p < g.pairs().size(); ++p) {
    const auto [mu, nu] = g.pairs()[p];
    for (std::size_t t = 0; t < f.size(); ++t) {
      const std::size_t u = g.left_transposition(p, t);
      ++result.checks;
      const XPoly diff = f[t] - f[u];
      if (diff.is_zero()) continue;
      const auto q = ring::divide_exact(diff, mu, nu);
      if (const auto* bad = std::get_if<ring::NotDivisible<XPoly>>(&q))
        result.violations.push_back({weyl::to_string(g.S()[t]), weyl::to_string(g.S()[u]), pair_label(mu, nu),
                                     ring::to_string(bad->remainder)});
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Weyl actions

TupleT act_on_indices(const SignedPerm& v, const TupleT& f) {
  if (v.size() != f.rank()) throw RankMismatch("group element rank differs from tuple rank");
  const auto& g = GroupTables::of(f.rank());
  const SignedPerm v_inv = weyl::invert(v);
  std::vector<LaurentPoly> out;
  out.reserve(f.size());
  for (const auto& w : g.W()) out.push_back(f[weyl::index_of(w * v_inv)]);
  return TupleT(f.rank(), std::move(out));
}

TupleX act_on_coefficients(const SignedPerm& v, const TupleX& f) {
  if (v.size() != f.rank()) throw RankMismatch("group element rank differs from tuple rank");
  if (!v.is_sign_change()) throw OutOfRange("coefficient action needs a pure sign change");
  std::vector<LaurentPoly> out;
  out.reserve(f.size());
  for (const auto& p : f.values()) out.push_back(weyl::act(v, p));
  return TupleX(f.rank(), std::move(out));
}

// ---------------------------------------------------------------------------
// Schubert classes

TupleT point_class(std::size_t n, Convention conv) {
  const auto& g = GroupTables::of(n);
  LaurentPoly prod = LaurentPoly::constant(n, 1);
  for (const auto& root : g.roots()) {
    ring::Exponents e = root.weight();
    for (auto& c : e) c *= conv.point_class_sign;
    prod *= LaurentPoly::constant(n, 1) - LaurentPoly::monomial(n, e);
  }
  TupleT f = TupleT::zero(n);
  f[weyl::index_of(SignedPerm::identity(n))] = prod;
  return f;
}

TupleT demazure(std::size_t i, const TupleT& f, Convention conv) {
  const std::size_t n = f.rank();
  if (i < 1 || i > n) throw OutOfRange("simple reflection index out of range");
  const auto& g = GroupTables::of(n);
  const ring::Exponents alpha = simple_root(i, n);
  std::vector<LaurentPoly> out(f.size(), LaurentPoly(n));
  for (std::size_t w = 0; w < f.size(); ++w) {
    const std::size_t ws = g.right_simple(i, w);
    if (ws < w) continue;  // the pair {w, w s_i} shares one value
    ring::Exponents y = weyl::act(g.W()[w], alpha);
    for (auto& c : y) c *= conv.demazure_sign;
    const LaurentPoly numerator = f[w] - f[ws].shifted(y);
    LaurentPoly value(n);
    if (!numerator.is_zero()) {
      const auto q = ring::divide_exact(numerator, ring::BinomialDivisor({y}));
      if (std::holds_alternative<ring::NotDivisible<LaurentPoly>>(q))
        throw InexactDivision("Demazure step D_" + std::to_string(i) + " is not exact at " +
                              weyl::to_string(g.W()[w]));
      value = -std::get<LaurentPoly>(q);
    }
    out[w] = value;
    out[ws] = std::move(value);
  }
  return TupleT(n, std::move(out));
}

TupleT schubert_from_word(const std::vector<std::size_t>& word, std::size_t n, Convention conv) {
  TupleT f = point_class(n, conv);
  for (std::size_t i : word) f = demazure(i, f, conv);
  return f;
}

SchubertTable::SchubertTable(std::size_t n, Convention conv, std::vector<TupleT> classes)
    : n_(n), conv_(conv), classes_(std::move(classes)) {
  if (classes_.size() != TupleT::vertex_count(n)) throw RankMismatch("Schubert table has the wrong size");
  for (const auto& c : classes_) check_tuple_rank(n, c.rank());
}

const TupleT& SchubertTable::at(const SignedPerm& w) const {
  if (w.size() != n_) throw RankMismatch("group element rank differs from table rank");
  return classes_[weyl::index_of(w)];
}

SchubertTable schubert_table(std::size_t n, Convention conv) {
  const auto& g = GroupTables::of(n);
  std::vector<std::optional<TupleT>> built(g.W().size());
  for (std::size_t w : g.by_length()) {
    if (g.length(w) == 0) {
      built[w] = point_class(n, conv);
      continue;
    }
    std::size_t i = 1;
    while (g.length(g.right_simple(i, w)) > g.length(w)) ++i;
    built[w] = demazure(i, *built[g.right_simple(i, w)], conv);
  }
  std::vector<TupleT> classes;
  classes.reserve(built.size());
  for (auto& c : built) classes.push_back(std::move(*c));
  return SchubertTable(n, conv, std::move(classes));
}

std::vector<PinningOutcome> evaluate_conventions() {
  std::vector<PinningOutcome> out;
  for (const Convention conv : {Convention{1, 1}, Convention{1, -1}, Convention{-1, 1}, Convention{-1, -1}}) {
    PinningOutcome o;
    o.convention = conv;
    try {
      const TupleT f = demazure(1, point_class(1, conv), conv);
      o.rank_one_fundamental = f == TupleT::constant(1, LaurentPoly::constant(1, 1));
    } catch (const InexactDivision&) {
    }
    try {
      const SchubertTable t = schubert_table(2, conv);
      o.exact_at_rank_two = true;
      o.top_class_is_one =
          t.at(weyl::longest_element(2)) == TupleT::constant(2, LaurentPoly::constant(2, 1));
    } catch (const InexactDivision&) {
    }
    out.push_back(o);
  }
  return out;
}

Convention pinned_convention() {
  static const Convention pinned = [] {
    for (const auto& o : evaluate_conventions())
      if (o.accepted()) return o.convention;
    throw Error("no sign convention yields the fundamental class");
  }();
  return pinned;
}

const SchubertTable& shared_schubert_table(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<SchubertTable>> cache;
  const Convention conv = pinned_convention();
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SchubertTable>(schubert_table(n, conv));
  return *slot;
}

TupleT schubert_class(const SignedPerm& w) { return shared_schubert_table(w.size()).at(w); }

CheckResult triangularity_check(const SchubertTable& table) {
  const auto& g = GroupTables::of(table.rank());
  CheckResult result;
  for (std::size_t w = 0; w < g.W().size(); ++w) {
    const std::set<SignedPerm> below = weyl::lower_interval(g.W()[w]);
    const TupleT& c = table[w];
    for (std::size_t v = 0; v < g.W().size(); ++v) {
      ++result.checks;
      const bool leq = below.contains(g.W()[v]);
      if (v == w && c[v].is_zero())
        result.violations.push_back({weyl::to_string(g.W()[w]), weyl::to_string(g.W()[v]), "diagonal", "0"});
      else if (!leq && !c[v].is_zero())
        result.violations.push_back(
            {weyl::to_string(g.W()[w]), weyl::to_string(g.W()[v]), "support", ring::to_string(c[v])});
    }
  }
  return result;
}

CheckResult lemma44_check(const SchubertTable& table) {
  const std::size_t n = table.rank();
  const auto& g = GroupTables::of(n);
  CheckResult result;
  for (std::size_t w = 0; w < g.W().size(); ++w) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (g.length(g.right_simple(i, w)) > g.length(w)) continue;
      ++result.checks;
      const TupleT moved = act_on_indices(weyl::simple_reflection(i, n), table[w]);
      if (moved != table[w])
        result.violations.push_back({weyl::to_string(g.W()[w]), weyl::to_string(g.W()[g.right_simple(i, w)]),
                                     "s" + std::to_string(i), "class moved"});
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Maps between models

TupleT pullback_pi(const TupleX& f) {
  const auto& g = GroupTables::of(f.rank());
  std::vector<LaurentPoly> out;
  out.reserve(g.W().size());
  for (std::size_t w = 0; w < g.W().size(); ++w) out.push_back(f[g.coset(w)]);
  return TupleT(f.rank(), std::move(out));
}

std::variant<TupleX, NotInvariantTuple> descend_pi(const TupleT& f) {
  const auto& g = GroupTables::of(f.rank());
  std::vector<std::optional<std::size_t>> reference(g.S().size());
  for (std::size_t w = 0; w < g.W().size(); ++w) {
    auto& ref = reference[g.coset(w)];
    if (!ref) {
      ref = w;
      continue;
    }
    if (f[w] != f[*ref]) {
      const SignedPerm& r = g.W()[*ref];
      return NotInvariantTuple{weyl::invert(r) * g.W()[w], g.W()[w]};
    }
  }
  std::vector<LaurentPoly> out;
  out.reserve(g.S().size());
  for (const auto& ref : reference) out.push_back(f[*ref]);
  return TupleX(f.rank(), std::move(out));
}

TupleX j_expand(const TupleG& f) {
  std::vector<LaurentPoly> out;
  out.reserve(f.size());
  for (const auto& p : f.values()) out.push_back(ring::x_expand(p));
  return TupleX(f.rank(), std::move(out));
}

std::variant<TupleG, NotCoeffInvariant> j_descend(const TupleX& f) {
  const auto& g = GroupTables::of(f.rank());
  std::vector<XPoly> out;
  out.reserve(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) {
    auto r = ring::sym_in_x(f[t]);
    if (const auto* bad = std::get_if<ring::NotInvariant>(&r)) return NotCoeffInvariant{g.S()[t], bad->variable};
    out.push_back(std::move(std::get<XPoly>(r)));
  }
  return TupleG(f.rank(), std::move(out));
}

TupleG canonical_class_L(std::size_t nu, std::size_t n) {
  if (nu < 1 || nu > n) throw OutOfRange("line bundle index out of range");
  const auto& g = GroupTables::of(n);
  std::vector<XPoly> out;
  out.reserve(g.S().size());
  for (const auto& tau : g.S()) out.push_back(XPoly::variable(n, static_cast<std::size_t>(tau(nu - 1))));
  return TupleG(n, std::move(out));
}

CheckResult presentation_check(std::size_t n) {
  const auto& g = GroupTables::of(n);
  CheckResult result;
  std::vector<TupleG> lines;
  for (std::size_t nu = 1; nu <= n; ++nu) {
    lines.push_back(canonical_class_L(nu, n));
    CheckResult c = check_G(lines.back());
    result.checks += c.checks;
    for (auto& v : c.violations) result.violations.push_back(std::move(v));
  }
  std::vector<XPoly> generators;
  for (std::size_t v = 0; v < n; ++v) generators.push_back(XPoly::variable(n, v));

  for (int k = 1; k <= static_cast<int>(n); ++k) {
    const XPoly expected = ring::elementary_symmetric<XPoly>(k, generators);
    const LaurentPoly expected_t = ring::x_expand(expected);
    std::vector<XPoly> lhs;
    for (std::size_t t = 0; t < g.S().size(); ++t) {
      std::vector<XPoly> args;
      for (const auto& l : lines) args.push_back(l[t]);
      lhs.push_back(ring::elementary_symmetric<XPoly>(k, args));
    }
    const TupleG sigma(n, std::move(lhs));
    const TupleX sigma_t = j_expand(sigma);
    const std::string label = "sigma_" + std::to_string(k);
    for (std::size_t t = 0; t < g.S().size(); ++t) {
      result.checks += 2;
      if (sigma[t] != expected)
        result.violations.push_back(
            {weyl::to_string(g.S()[t]), "", label, ring::to_string(XPoly(sigma[t] - expected))});
      if (sigma_t[t] != expected_t)
        result.violations.push_back(
            {weyl::to_string(g.S()[t]), "", label + " (T)", ring::to_string(LaurentPoly(sigma_t[t] - expected_t))});
    }
  }
  return result;
}

BridgeOutcome lemma53_bridge(const XPoly& f, std::size_t mu, std::size_t nu) {
  const std::size_t n = f.rank();
  if (mu >= nu || nu >= n) throw OutOfRange("bridge needs 0 <= mu < nu < n");
  ring::Exponents minus(n, 0), plus(n, 0), shift(n, 0);
  minus[mu] = 1;
  minus[nu] = -1;
  plus[mu] = 1;
  plus[nu] = 1;
  shift[mu] = 1;

  BridgeOutcome out;
  const auto qx = ring::divide_exact(f, mu, nu);
  const auto qt = ring::divide_exact(ring::x_expand(f), ring::BinomialDivisor({minus, plus}));
  out.x_divisible = std::holds_alternative<XPoly>(qx);
  out.t_divisible = std::holds_alternative<LaurentPoly>(qt);
  if (!out.x_divisible || !out.t_divisible) return out;

  const XPoly& q = std::get<XPoly>(qx);
  const LaurentPoly& laurent = std::get<LaurentPoly>(qt);
  ring::Exponents unshift = shift;
  unshift[mu] = -1;
  if (laurent != ring::x_expand(q).shifted(unshift)) return out;

  const auto parts = ring::basis_decompose(laurent.shifted(shift));
  const ring::Exponents zero(n, 0);
  for (const auto& [eps, c] : parts)
    if (eps != zero && !c.is_zero()) return out;
  const XPoly& g0 = parts.at(zero);
  const XPoly difference = XPoly::variable(n, mu) - XPoly::variable(n, nu);
  out.quotients_agree = g0 == q && difference * g0 == f;
  return out;
}

std::vector<SignedPerm> max_length_reps(std::size_t n) {
  std::vector<SignedPerm> out;
  for (const auto& tau : GroupTables::of(n).S()) out.push_back(weyl::max_length_rep(tau));
  return out;
}

// ---------------------------------------------------------------------------
// Schubert expansion

namespace {

/// diag = unit * prod (e^b - 1) over b in `factors` (repeats allowed).
struct FactoredDiagonal {
  std::vector<ring::Exponents> factors;
  ring::BigInt sign;
  ring::Exponents shift;
};

std::optional<FactoredDiagonal> factor_diagonal(LaurentPoly d, std::size_t n) {
  FactoredDiagonal out;
  for (const auto& root : weyl::positive_roots(n)) {
    const ring::BinomialDivisor div({root.weight()});
    while (true) {
      auto q = ring::divide_exact(d, div);
      if (!std::holds_alternative<LaurentPoly>(q)) break;
      d = std::move(std::get<LaurentPoly>(q));
      out.factors.push_back(root.weight());
    }
  }
  if (d.size() != 1) return std::nullopt;
  const auto& [e, c] = *d.terms().begin();
  if (c != 1 && c != -1) return std::nullopt;
  out.sign = c;
  out.shift = e;
  for (auto& x : out.shift) x = -x;
  return out;
}

std::optional<LaurentPoly> divide_by(LaurentPoly r, const FactoredDiagonal& d) {
  for (const auto& b : d.factors) {
    auto q = ring::divide_exact(r, ring::BinomialDivisor({b}));
    if (!std::holds_alternative<LaurentPoly>(q)) return std::nullopt;
    r = std::move(std::get<LaurentPoly>(q));
  }
  return r.shifted(d.shift).scaled(d.sign);
}

}  // namespace

std::variant<std::map<SignedPerm, LaurentPoly>, NotInSpan> expand_in_schubert(
    const TupleT& f, const std::vector<SignedPerm>& basis, const SchubertTable& table) {
  const std::size_t n = f.rank();
  check_tuple_rank(table.rank(), n);
  const auto& g = GroupTables::of(n);
  std::vector<std::size_t> order;
  for (const auto& b : basis) {
    if (b.size() != n) throw RankMismatch("basis element rank differs from tuple rank");
    order.push_back(weyl::index_of(b));
  }
  std::sort(order.begin(), order.end(), [&g](std::size_t a, std::size_t b) {
    return g.length(a) != g.length(b) ? g.length(a) > g.length(b) : a < b;
  });
  order.erase(std::unique(order.begin(), order.end()), order.end());

  TupleT residual = f;
  std::map<SignedPerm, LaurentPoly> coefficients;
  for (std::size_t b : order) {
    const LaurentPoly& at_b = residual[b];
    if (at_b.is_zero()) {
      coefficients.emplace(g.W()[b], LaurentPoly(n));
      continue;
    }
    const auto diag = factor_diagonal(table[b][b], n);
    if (!diag) throw Error("Schubert class " + weyl::to_string(g.W()[b]) + " has an unexpected diagonal entry");
    auto a = divide_by(at_b, *diag);
    if (!a) return NotInSpan{"coefficient is not a Laurent polynomial", weyl::to_string(g.W()[b]), ring::to_string(at_b)};
    residual -= table[b].scaled(*a);
    coefficients.emplace(g.W()[b], std::move(*a));
  }
  for (std::size_t w = 0; w < residual.size(); ++w)
    if (!residual[w].is_zero())
      return NotInSpan{"nonzero residual outside the basis", weyl::to_string(g.W()[w]), ring::to_string(residual[w])};
  return coefficients;
}

}  // namespace qflagk::gkm
