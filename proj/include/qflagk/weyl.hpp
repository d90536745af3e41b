#pragma once

// Type C_n root data and the Weyl group W_{Sp(n)} of signed permutations.
//
// Conventions: indices are 0-based internally and 1-based in every printed
// or parsed form. A weight is a coordinate vector in the basis L^1..L^n and
// e^lambda is the Laurent monomial with the same exponent vector.
// Composition is (w*v)(lambda) = w(v(lambda)).

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qflagk/ring.hpp"

namespace qflagk::weyl {

using Weight = ring::Exponents;

/// A root of C_n: +-L^mu +- L^nu (mu != nu) or +-2L^nu.
class Root {
 public:
  explicit Root(Weight w);
  const Weight& weight() const { return weight_; }
  std::size_t rank() const { return weight_.size(); }
  /// Positive iff the first nonzero coordinate is positive.
  bool positive() const;
  bool is_long() const;
  friend bool operator==(const Root&, const Root&) = default;

 private:
  Weight weight_;
};

/// L^mu - L^nu, L^mu + L^nu for mu < nu, then 2L^nu. n^2 roots in total.
std::vector<Root> positive_roots(std::size_t n);

bool is_root(const Weight& w);

class Perm {
 public:
  Perm() = default;
  /// 0-based images; must be a bijection of {0..n-1}.
  explicit Perm(std::vector<int> images);
  static Perm identity(std::size_t n);
  /// Transposition of 0-based positions a and b.
  static Perm transposition(std::size_t n, std::size_t a, std::size_t b);

  std::size_t size() const { return images_.size(); }
  int operator()(std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  Perm inverse() const;
  std::size_t inversions() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// Element of W_{Sp(n)}: L^v -> signs[v] * L^{perm(v)}.
class SignedPerm {
 public:
  SignedPerm() = default;
  SignedPerm(Perm perm, std::vector<int> signs);
  static SignedPerm identity(std::size_t n);
  static SignedPerm embed(const Perm& p);
  /// Window notation, entry v equals signs[v] * (perm(v) + 1).
  static SignedPerm from_window(const std::vector<int>& window);

  std::size_t size() const { return perm_.size(); }
  const Perm& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }
  std::vector<int> window() const;
  bool is_sign_change() const;

  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  Perm perm_;
  std::vector<int> signs_;
};

/// s_i for 1 <= i <= n: the transposition (i, i+1) for i < n, the sign flip
/// at n for i = n.
SignedPerm simple_reflection(std::size_t i, std::size_t n);
SignedPerm reflection(const Root& alpha);

SignedPerm compose(const SignedPerm& w, const SignedPerm& v);
SignedPerm operator*(const SignedPerm& w, const SignedPerm& v);
SignedPerm invert(const SignedPerm& w);
Weight act(const SignedPerm& w, const Weight& lambda);
/// e^lambda -> e^{w(lambda)}, extended to a ring automorphism.
ring::LaurentPoly act(const SignedPerm& w, const ring::LaurentPoly& f);

std::size_t length(const SignedPerm& w);
std::size_t length(const Perm& p);

/// Product of s_{word[0]} s_{word[1]} ... (1-based letters).
SignedPerm word_product(const std::vector<std::size_t>& word, std::size_t n);
/// Peels the smallest right descent until the identity is reached.
std::vector<std::size_t> reduced_word(const SignedPerm& w);

/// All products of subwords of a reduced word of w; equals {v : v <= w}.
std::set<SignedPerm> lower_interval(const SignedPerm& w);
bool bruhat_leq(const SignedPerm& v, const SignedPerm& w);
bool bruhat_leq(const Perm& v, const Perm& w);

/// Permutations in lexicographic order of one-line notation.
std::vector<Perm> enumerate_S(std::size_t n);
/// Permutation-major, then sign mask (bit v set means signs[v] = -1).
std::vector<SignedPerm> enumerate_W(std::size_t n);
std::vector<SignedPerm> enumerate_WG(std::size_t n);
/// Position of an element in enumerate_S / enumerate_W.
std::size_t index_of(const Perm& p);
std::size_t index_of(const SignedPerm& w);

Perm coset_map(const SignedPerm& w);
SignedPerm longest_element(std::size_t n);
/// The unique longest member of tau * W_G. Throws MaxNotUnique on a tie.
SignedPerm max_length_rep(const Perm& tau);

std::string to_string(const Perm& p);
std::string to_string(const SignedPerm& w);
std::string to_string(const Weight& w);
Perm parse_perm(std::string_view text);
SignedPerm parse_signed_perm(std::string_view text);

}  // namespace qflagk::weyl
