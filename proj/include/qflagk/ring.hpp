#pragma once

// Exact arithmetic in R[T] = Z[x1^{+-1},...,xn^{+-1}] and R[G] = Z[X1,...,Xn]
// with Xv = xv + xv^{-1}.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qflagk/error.hpp"

namespace qflagk::ring {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent of each variable in a monomial; the length is the ring rank.
using Exponents = std::vector<int>;

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken by the first differing exponent.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

enum class Variables { Laurent, X };

/// Sparse polynomial with integer coefficients. Terms are kept in canonical
/// form (no zero coefficients), so equality is structural.
///
/// For Variables::X every exponent must be nonnegative.
template <Variables V>
class Polynomial {
 public:
  using TermMap = std::map<Exponents, BigInt, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t rank) : rank_(rank) {}

  static Polynomial constant(std::size_t rank, const BigInt& c);
  static Polynomial monomial(std::size_t rank, Exponents e, const BigInt& c = 1);
  /// The generator x_{index+1} (or X_{index+1}).
  static Polynomial variable(std::size_t rank, std::size_t index);

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const BigInt& c);

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial scaled(const BigInt& c) const;
  /// Multiply by the monomial x^e (Laurent only makes sense for negative e).
  Polynomial shifted(const Exponents& e) const;

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    Polynomial r = f;
    r *= g;
    return r;
  }
  friend Polynomial operator-(const Polynomial& f) { return f.scaled(-1); }
  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.rank_ == g.rank_ && f.terms_ == g.terms_;
  }

 private:
  void check_rank(const Polynomial& g) const;
  void check_exponents(const Exponents& e) const;

  std::size_t rank_ = 0;
  TermMap terms_;
};

using LaurentPoly = Polynomial<Variables::Laurent>;
using XPoly = Polynomial<Variables::X>;

extern template class Polynomial<Variables::Laurent>;
extern template class Polynomial<Variables::X>;

/// Product of binomials (x^m - 1) over pairwise distinct nonzero exponent
/// vectors m.
class BinomialDivisor {
 public:
  explicit BinomialDivisor(std::vector<Exponents> factors);
  const std::vector<Exponents>& factors() const { return factors_; }
  std::size_t rank() const;
  LaurentPoly expand() const;

 private:
  std::vector<Exponents> factors_;
};

/// Failure of an exact division: which factor failed (0 for single-factor
/// divisors) and the nonzero remainder left after reducing by it.
template <class Poly>
struct NotDivisible {
  std::size_t factor = 0;
  Poly remainder;
};

template <class Poly>
using DivisionResult = std::variant<Poly, NotDivisible<Poly>>;

/// Divides f by prod(x^m - 1), one factor at a time in the listed order.
DivisionResult<LaurentPoly> divide_exact(const LaurentPoly& f, const BinomialDivisor& d);

/// Divides f by (X_mu - X_nu) in Z[X1..Xn]; indices are 0-based.
DivisionResult<XPoly> divide_exact(const XPoly& f, std::size_t mu, std::size_t nu);

/// Image of one variable under a monomial substitution: x_v -> sign * x^exponents.
struct MonomialImage {
  int sign = 1;
  Exponents exponents;
};

LaurentPoly substitute(const LaurentPoly& f, std::span<const MonomialImage> assignment);

/// Substitutes X_v := x_v + x_v^{-1}.
LaurentPoly x_expand(const XPoly& g);

/// Coefficients c_eps in f = sum_eps x_expand(c_eps) * x^eps, eps in {-1,0}^n.
/// Every one of the 2^n keys is present, zero components included.
std::map<Exponents, XPoly> basis_decompose(const LaurentPoly& f);

/// Witness that a Laurent polynomial is not invariant under x_v -> x_v^{-1}.
struct NotInvariant {
  std::size_t variable = 0;
};

std::variant<XPoly, NotInvariant> sym_in_x(const LaurentPoly& f);

/// k-th elementary symmetric polynomial of the arguments, 1 <= k <= args.size().
template <class Poly>
Poly elementary_symmetric(int k, std::span<const Poly> args);

extern template LaurentPoly elementary_symmetric(int, std::span<const LaurentPoly>);
extern template XPoly elementary_symmetric(int, std::span<const XPoly>);

// Text form, e.g. "2*x1^2*x2^-1 - x1 + 3". Grammar in README.
std::string to_string(const LaurentPoly& f);
std::string to_string(const XPoly& f);
LaurentPoly parse_laurent(std::string_view text, std::size_t rank);
XPoly parse_xpoly(std::string_view text, std::size_t rank);

}  // namespace qflagk::ring
