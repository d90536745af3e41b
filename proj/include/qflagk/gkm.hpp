#pragma once

// Fixed-point (GKM) models of equivariant K-theory:
//
//   T-model  K_T(Sp(n)/T):   tuples over W_{Sp(n)} of Laurent polynomials,
//                            (e^a - 1) | f_w - f_{s_a w} for a > 0.
//   X-model  K_T(Fl_n(H)):   tuples over S_n of Laurent polynomials,
//                            (x_mu/x_nu - 1)(x_mu x_nu - 1) | f_t - f_{(mu nu) t}.
//   G-model  K_G(Fl_n(H)):   tuples over S_n of polynomials in X,
//                            (X_mu - X_nu) | f_t - f_{(mu nu) t}.
//
// Tuple slots follow weyl::enumerate_W / weyl::enumerate_S order.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qflagk/ring.hpp"
#include "qflagk/weyl.hpp"

namespace qflagk::gkm {

using ring::LaurentPoly;
using ring::XPoly;
using weyl::Perm;
using weyl::SignedPerm;

enum class Model { T, X, G };

const char* model_name(Model m);

/// Lookup tables over W_{Sp(n)} and S_n, built once per rank.
class GroupTables {
 public:
  static const GroupTables& of(std::size_t n);

  std::size_t rank() const { return n_; }
  const std::vector<SignedPerm>& W() const { return w_; }
  const std::vector<Perm>& S() const { return s_; }
  const std::vector<weyl::Root>& roots() const { return roots_; }
  std::size_t length(std::size_t w) const { return lengths_[w]; }
  /// Index of w * s_i, 1 <= i <= n.
  std::size_t right_simple(std::size_t i, std::size_t w) const { return right_simple_[i - 1][w]; }
  /// Index of s_alpha * w for the a-th positive root.
  std::size_t left_reflection(std::size_t a, std::size_t w) const { return left_reflection_[a][w]; }
  /// S_n index of the coset of w.
  std::size_t coset(std::size_t w) const { return coset_[w]; }
  /// Pairs (mu, nu), mu < nu, 0-based, in lexicographic order.
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  /// S_n index of (mu nu) * t for the p-th pair.
  std::size_t left_transposition(std::size_t p, std::size_t t) const { return left_transposition_[p][t]; }
  /// W indices sorted by length, then by index.
  const std::vector<std::size_t>& by_length() const { return by_length_; }

 private:
  explicit GroupTables(std::size_t n);

  std::size_t n_;
  std::vector<SignedPerm> w_;
  std::vector<Perm> s_;
  std::vector<weyl::Root> roots_;
  std::vector<std::size_t> lengths_;
  std::vector<std::vector<std::size_t>> right_simple_;
  std::vector<std::vector<std::size_t>> left_reflection_;
  std::vector<std::size_t> coset_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::vector<std::size_t>> left_transposition_;
  std::vector<std::size_t> by_length_;
};

template <Model M>
struct ModelTraits;

template <>
struct ModelTraits<Model::T> {
  using Key = SignedPerm;
  using Poly = LaurentPoly;
};
template <>
struct ModelTraits<Model::X> {
  using Key = Perm;
  using Poly = LaurentPoly;
};
template <>
struct ModelTraits<Model::G> {
  using Key = Perm;
  using Poly = XPoly;
};

/// One polynomial per fixed point.
template <Model M>
class Tuple {
 public:
  using Key = typename ModelTraits<M>::Key;
  using Poly = typename ModelTraits<M>::Poly;
  static constexpr Model model = M;

  Tuple() = default;
  Tuple(std::size_t rank, std::vector<Poly> values);
  static Tuple constant(std::size_t rank, const Poly& c);
  static Tuple zero(std::size_t rank) { return constant(rank, Poly(rank)); }
  /// Number of fixed points of the model at this rank.
  static std::size_t vertex_count(std::size_t rank);
  static Key key(std::size_t rank, std::size_t index);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Poly>& values() const { return values_; }
  const Poly& operator[](std::size_t i) const { return values_[i]; }
  Poly& operator[](std::size_t i) { return values_[i]; }
  const Poly& at(const Key& k) const;

  Tuple& operator+=(const Tuple& g);
  Tuple& operator-=(const Tuple& g);
  friend Tuple operator+(Tuple f, const Tuple& g) { return f += g; }
  friend Tuple operator-(Tuple f, const Tuple& g) { return f -= g; }
  /// Componentwise product.
  friend Tuple operator*(const Tuple& f, const Tuple& g) { return f.times(g); }
  Tuple times(const Tuple& g) const;
  /// Multiplication by a coefficient from the base ring.
  Tuple scaled(const Poly& c) const;
  friend bool operator==(const Tuple&, const Tuple&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Poly> values_;
};

using TupleT = Tuple<Model::T>;
using TupleX = Tuple<Model::X>;
using TupleG = Tuple<Model::G>;

extern template class Tuple<Model::T>;
extern template class Tuple<Model::X>;
extern template class Tuple<Model::G>;

/// A failed edge condition. Keys are in window/one-line notation; `edge` is
/// the root (T-model) or the transposition "(mu,nu)" (X/G-models).
struct Violation {
  std::string vertex;
  std::string neighbor;
  std::string edge;
  std::string remainder;
};

struct CheckResult {
  std::size_t checks = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// All |positive roots| x |W| ordered edge conditions.
CheckResult check_T(const TupleT& f);
/// All C(n,2) x n! ordered pair conditions.
CheckResult check_X(const TupleX& f);
CheckResult check_G(const TupleG& f);

/// (v.f)_w = f_{w v^{-1}}.
TupleT act_on_indices(const SignedPerm& v, const TupleT& f);
/// Applies the sign change v to every component. Throws OutOfRange if v is
/// not in W_G.
TupleX act_on_coefficients(const SignedPerm& v, const TupleX& f);

// ---------------------------------------------------------------------------
// Schubert classes

/// Sign choices left open by the fixed-point formulas: the point class at e is
/// prod_{a>0} (1 - e^{c a}) with c = point_class_sign, and the Demazure step
/// uses y = e^{d w(a_i)} with d = demazure_sign.
struct Convention {
  int point_class_sign = 1;
  int demazure_sign = 1;
  friend bool operator==(const Convention&, const Convention&) = default;
};

TupleT point_class(std::size_t n, Convention conv);

/// (D_i f)_w = (f_w - y f_{w s_i}) / (1 - y), y = e^{d w(a_i)}.
/// Throws InexactDivision.
TupleT demazure(std::size_t i, const TupleT& f, Convention conv);

/// Applies D_{word[0]}, D_{word[1]}, ... to the point class.
TupleT schubert_from_word(const std::vector<std::size_t>& word, std::size_t n, Convention conv);

class SchubertTable {
 public:
  SchubertTable(std::size_t n, Convention conv, std::vector<TupleT> classes);
  std::size_t rank() const { return n_; }
  const Convention& convention() const { return conv_; }
  const std::vector<TupleT>& classes() const { return classes_; }
  const TupleT& operator[](std::size_t w) const { return classes_[w]; }
  const TupleT& at(const SignedPerm& w) const;

 private:
  std::size_t n_;
  Convention conv_;
  std::vector<TupleT> classes_;
};

/// [O_e] = point class, [O_{w s_i}] = D_i [O_w] along increasing length.
SchubertTable schubert_table(std::size_t n, Convention conv);
/// Pinned convention; built once per rank and shared.
const SchubertTable& shared_schubert_table(std::size_t n);
TupleT schubert_class(const SignedPerm& w);

struct PinningOutcome {
  Convention convention;
  bool rank_one_fundamental = false;  // D_1 [pt] = 1 at n = 1
  bool exact_at_rank_two = false;     // every Demazure step divides at n = 2
  bool top_class_is_one = false;      // [O_{w0}] = 1 at n = 2
  bool accepted() const { return rank_one_fundamental && exact_at_rank_two && top_class_is_one; }
};

/// Evaluates all four sign combinations, preferred order first.
std::vector<PinningOutcome> evaluate_conventions();
/// First accepted convention of evaluate_conventions().
Convention pinned_convention();

/// Support triangularity: [O_w]_v = 0 unless v <= w, and [O_w]_w != 0.
CheckResult triangularity_check(const SchubertTable& table);
/// For every w and simple i with w s_i <= w, s_i.[O_w] = [O_w].
CheckResult lemma44_check(const SchubertTable& table);

// ---------------------------------------------------------------------------
// Maps between models

/// (pi^* f)_w = f_{coset(w)}.
TupleT pullback_pi(const TupleX& f);

struct NotInvariantTuple {
  SignedPerm v;
  SignedPerm w;  // f_{w v^{-1}} != f_w
};
std::variant<TupleX, NotInvariantTuple> descend_pi(const TupleT& f);

/// Componentwise X_v := x_v + x_v^{-1}.
TupleX j_expand(const TupleG& f);

struct NotCoeffInvariant {
  Perm tau;
  std::size_t variable = 0;  // 0-based sign change that moves f_tau
};
std::variant<TupleG, NotCoeffInvariant> j_descend(const TupleX& f);

/// [L_nu] at tau is X_{tau(nu)}; nu is 1-based.
TupleG canonical_class_L(std::size_t nu, std::size_t n);

/// sigma_k([L_1],...,[L_n]) = sigma_k(X_1..X_n) for every k, in the G-model
/// and after j_expand.
CheckResult presentation_check(std::size_t n);

/// Both divisibility tests for one X-polynomial and one pair mu < nu
/// (0-based).
struct BridgeOutcome {
  bool x_divisible = false;  // (X_mu - X_nu) | f
  bool t_divisible = false;  // (x_mu/x_nu - 1)(x_mu x_nu - 1) | x_expand(f)
  /// Both divide, the Laurent quotient is x_mu^{-1} x_expand(q) for the
  /// X-quotient q, and basis_decompose of x_mu * (Laurent quotient) returns
  /// q alone with (X_mu - X_nu) q = f.
  bool quotients_agree = false;
};
BridgeOutcome lemma53_bridge(const XPoly& f, std::size_t mu, std::size_t nu);

/// max_length_rep(tau) for tau in enumerate_S order.
std::vector<SignedPerm> max_length_reps(std::size_t n);

struct NotInSpan {
  std::string reason;
  std::string vertex;
  std::string residual;
};

/// Solves f = sum a_w [O_w] over `basis` by descending length.
std::variant<std::map<SignedPerm, LaurentPoly>, NotInSpan> expand_in_schubert(
    const TupleT& f, const std::vector<SignedPerm>& basis, const SchubertTable& table);

}  // namespace qflagk::gkm
