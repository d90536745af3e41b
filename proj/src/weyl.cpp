#include "qflagk/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace qflagk::weyl {

namespace {

std::size_t nonzero_count(const Weight& w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](int a) { return a != 0; }));
}

bool first_nonzero_positive(const Weight& w) {
  for (int a : w)
    if (a != 0) return a > 0;
  return false;
}

}  // namespace

bool is_root(const Weight& w) {
  const std::size_t nz = nonzero_count(w);
  if (nz == 1) {
    return std::any_of(w.begin(), w.end(), [](int a) { return a == 2 || a == -2; });
  }
  if (nz == 2) {
    return std::all_of(w.begin(), w.end(), [](int a) { return a >= -1 && a <= 1; });
  }
  return false;
}

Root::Root(Weight w) : weight_(std::move(w)) {
  if (!is_root(weight_)) throw OutOfRange("not a root of C_n: " + to_string(weight_));
}

bool Root::positive() const { return first_nonzero_positive(weight_); }

bool Root::is_long() const { return nonzero_count(weight_) == 1; }

std::vector<Root> positive_roots(std::size_t n) {
  std::vector<Root> out;
  out.reserve(n * n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    for (std::size_t nu = mu + 1; nu < n; ++nu) {
      Weight minus(n, 0), plus(n, 0);
      minus[mu] = 1;
      minus[nu] = -1;
      plus[mu] = 1;
      plus[nu] = 1;
      out.emplace_back(std::move(minus));
      out.emplace_back(std::move(plus));
    }
  }
  for (std::size_t nu = 0; nu < n; ++nu) {
    Weight twice(n, 0);
    twice[nu] = 2;
    out.emplace_back(std::move(twice));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int a : images_) {
    if (a < 0 || static_cast<std::size_t>(a) >= images_.size() || seen[a])
      throw OutOfRange("not a permutation");
    seen[a] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

Perm Perm::transposition(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= n || b >= n) throw OutOfRange("transposition index out of range");
  Perm p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return Perm(std::move(inv));
}

std::size_t Perm::inversions() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw RankMismatch("permutation sizes differ");
  std::vector<int> images(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) images[i] = a(static_cast<std::size_t>(b(i)));
  return Perm(std::move(images));
}

// ---------------------------------------------------------------------------
// SignedPerm

SignedPerm::SignedPerm(Perm perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (signs_.size() != perm_.size()) throw RankMismatch("sign vector length differs from permutation size");
  for (int s : signs_)
    if (s != 1 && s != -1) throw OutOfRange("signs must be +-1");
}

SignedPerm SignedPerm::identity(std::size_t n) { return SignedPerm(Perm::identity(n), std::vector<int>(n, 1)); }

SignedPerm SignedPerm::embed(const Perm& p) { return SignedPerm(p, std::vector<int>(p.size(), 1)); }

SignedPerm SignedPerm::from_window(const std::vector<int>& window) {
  std::vector<int> images(window.size()), signs(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i] == 0) throw OutOfRange("window entries must be nonzero");
    images[i] = std::abs(window[i]) - 1;
    signs[i] = window[i] > 0 ? 1 : -1;
  }
  return SignedPerm(Perm(std::move(images)), std::move(signs));
}

std::vector<int> SignedPerm::window() const {
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = signs_[i] * (perm_(i) + 1);
  return out;
}

bool SignedPerm::is_sign_change() const { return perm_ == Perm::identity(size()); }

SignedPerm simple_reflection(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) throw OutOfRange("simple reflection index out of range");
  if (i < n) return SignedPerm::embed(Perm::transposition(n, i - 1, i));
  std::vector<int> signs(n, 1);
  signs[n - 1] = -1;
  return SignedPerm(Perm::identity(n), std::move(signs));
}

SignedPerm reflection(const Root& alpha) {
  const Weight& a = alpha.weight();
  const std::size_t n = a.size();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0) support.push_back(i);

  if (support.size() == 1) {
    std::vector<int> signs(n, 1);
    signs[support[0]] = -1;
    return SignedPerm(Perm::identity(n), std::move(signs));
  }
  const std::size_t mu = support[0], nu = support[1];
  Perm swap = Perm::transposition(n, mu, nu);
  if (a[mu] == -a[nu]) return SignedPerm::embed(swap);
  // L^mu + L^nu: L^mu -> -L^nu, L^nu -> -L^mu
  std::vector<int> signs(n, 1);
  signs[mu] = -1;
  signs[nu] = -1;
  return SignedPerm(std::move(swap), std::move(signs));
}

SignedPerm compose(const SignedPerm& w, const SignedPerm& v) {
  if (w.size() != v.size()) throw RankMismatch("signed permutation sizes differ");
  const std::size_t n = w.size();
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = v.signs()[i] * w.signs()[v.perm()(i)];
  return SignedPerm(w.perm() * v.perm(), std::move(signs));
}

SignedPerm operator*(const SignedPerm& w, const SignedPerm& v) { return compose(w, v); }

SignedPerm invert(const SignedPerm& w) {
  const std::size_t n = w.size();
  std::vector<int> images(n), signs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int j = w.perm()(i);
    images[j] = static_cast<int>(i);
    signs[j] = w.signs()[i];
  }
  return SignedPerm(Perm(std::move(images)), std::move(signs));
}

Weight act(const SignedPerm& w, const Weight& lambda) {
  if (lambda.size() != w.size()) throw RankMismatch("weight rank differs from group rank");
  Weight out(lambda.size(), 0);
  for (std::size_t i = 0; i < lambda.size(); ++i) out[w.perm()(i)] += w.signs()[i] * lambda[i];
  return out;
}

ring::LaurentPoly act(const SignedPerm& w, const ring::LaurentPoly& f) {
  if (f.rank() != w.size()) throw RankMismatch("polynomial rank differs from group rank");
  ring::LaurentPoly out(f.rank());
  for (const auto& [e, c] : f.terms()) out.add_term(act(w, e), c);
  return out;
}

std::size_t length(const SignedPerm& w) {
  std::size_t count = 0;
  for (const Root& alpha : positive_roots(w.size()))
    if (!first_nonzero_positive(act(w, alpha.weight()))) ++count;
  return count;
}

std::size_t length(const Perm& p) { return p.inversions(); }

SignedPerm word_product(const std::vector<std::size_t>& word, std::size_t n) {
  SignedPerm w = SignedPerm::identity(n);
  for (std::size_t i : word) w = w * simple_reflection(i, n);
  return w;
}

std::vector<std::size_t> reduced_word(const SignedPerm& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> peeled;
  SignedPerm cur = w;
  std::size_t len = length(cur);
  while (len > 0) {
    bool found = false;
    for (std::size_t i = 1; i <= n; ++i) {
      SignedPerm next = cur * simple_reflection(i, n);
      const std::size_t next_len = length(next);
      if (next_len < len) {
        peeled.push_back(i);
        cur = std::move(next);
        len = next_len;
        found = true;
        break;
      }
    }
    if (!found) throw Error("no descent found for a nonidentity element");
  }
  return {peeled.rbegin(), peeled.rend()};
}

std::set<SignedPerm> lower_interval(const SignedPerm& w) {
  const std::size_t n = w.size();
  std::set<SignedPerm> reached{SignedPerm::identity(n)};
  for (std::size_t letter : reduced_word(w)) {
    const SignedPerm s = simple_reflection(letter, n);
    std::vector<SignedPerm> extended;
    extended.reserve(reached.size());
    for (const auto& x : reached) extended.push_back(x * s);
    reached.insert(extended.begin(), extended.end());
  }
  return reached;
}

bool bruhat_leq(const SignedPerm& v, const SignedPerm& w) {
  if (v.size() != w.size()) throw RankMismatch("Bruhat comparison across ranks");
  if (length(v) > length(w)) return false;
  return lower_interval(w).contains(v);
}

bool bruhat_leq(const Perm& v, const Perm& w) {
  return bruhat_leq(SignedPerm::embed(v), SignedPerm::embed(w));
}

std::vector<Perm> enumerate_S(std::size_t n) {
  std::vector<Perm> out;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<SignedPerm> enumerate_W(std::size_t n) {
  std::vector<SignedPerm> out;
  for (const Perm& p : enumerate_S(n)) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> signs(n, 1);
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) signs[i] = -1;
      out.emplace_back(p, std::move(signs));
    }
  }
  return out;
}

std::vector<SignedPerm> enumerate_WG(std::size_t n) {
  std::vector<SignedPerm> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> signs(n, 1);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) signs[i] = -1;
    out.emplace_back(Perm::identity(n), std::move(signs));
  }
  return out;
}

std::size_t index_of(const Perm& p) {
  // Lehmer code read as a factorial-base number.
  const std::size_t n = p.size();
  std::size_t index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (p(j) < p(i)) ++smaller;
    index = index * (n - i) + smaller;
  }
  return index;
}

std::size_t index_of(const SignedPerm& w) {
  std::size_t mask = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.signs()[i] < 0) mask |= std::size_t{1} << i;
  return (index_of(w.perm()) << w.size()) | mask;
}

Perm coset_map(const SignedPerm& w) { return w.perm(); }

SignedPerm longest_element(std::size_t n) {
  return SignedPerm(Perm::identity(n), std::vector<int>(n, -1));
}

SignedPerm max_length_rep(const Perm& tau) {
  const std::size_t n = tau.size();
  const SignedPerm base = SignedPerm::embed(tau);
  SignedPerm best;
  std::size_t best_len = 0;
  bool tie = false, have = false;
  for (const SignedPerm& v : enumerate_WG(n)) {
    SignedPerm w = base * v;
    const std::size_t len = length(w);
    if (!have || len > best_len) {
      best = std::move(w);
      best_len = len;
      tie = false;
      have = true;
    } else if (len == best_len) {
      tie = true;
    }
  }
  if (tie) throw MaxNotUnique("coset of " + to_string(tau) + " has two longest members");
  return best;
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

std::string bracketed(const std::vector<int>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i];
  }
  out << ']';
  return out.str();
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip();
  const bool bracket = i < text.size() && text[i] == '[';
  if (bracket) ++i;
  while (true) {
    skip();
    if (i == text.size() || text[i] == ']') break;
    const std::size_t start = i;
    if (text[i] == '-' || text[i] == '+') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || !std::isdigit(static_cast<unsigned char>(text[i - 1])))
      throw ParseError("bad integer in list: " + std::string(text));
    out.push_back(std::stoi(std::string(text.substr(start, i - start))));
  }
  if (bracket) {
    if (i == text.size()) throw ParseError("missing ']' in " + std::string(text));
    ++i;
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters in " + std::string(text));
  return out;
}

}  // namespace

std::string to_string(const Perm& p) {
  std::vector<int> one_line(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) one_line[i] = p(i) + 1;
  return bracketed(one_line);
}

std::string to_string(const SignedPerm& w) { return bracketed(w.window()); }

std::string to_string(const Weight& w) { return bracketed(w); }

Perm parse_perm(std::string_view text) {
  std::vector<int> one_line = parse_int_list(text);
  for (int& a : one_line) a -= 1;
  try {
    return Perm(std::move(one_line));
  } catch (const OutOfRange&) {
    throw ParseError("not a permutation: " + std::string(text));
  }
}

SignedPerm parse_signed_perm(std::string_view text) {
  try {
    return SignedPerm::from_window(parse_int_list(text));
  } catch (const OutOfRange&) {
    throw ParseError("not a signed permutation: " + std::string(text));
  }
}

}  // namespace qflagk::weyl
