#pragma once

// Exact quaternions over Q and square quaternionic matrices.
//
// H^n is a left H-module of row vectors; GL_n(H) acts by g.h = h * g^*.
// Row operations multiply by scalars on the left.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "qflagk/error.hpp"

namespace qflagk::quat {

using Rational = boost::multiprecision::mpq_rational;

struct Quaternion {
  Rational a, b, c, d;  // a + b i + c j + d k

  Quaternion() = default;
  Quaternion(Rational a_, Rational b_ = 0, Rational c_ = 0, Rational d_ = 0)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  Quaternion conjugate() const { return {a, -b, -c, -d}; }
  Rational norm2() const { return a * a + b * b + c * c + d * d; }
  /// Throws SingularMatrix for zero.
  Quaternion inverse() const;

  Quaternion& operator+=(const Quaternion& q);
  Quaternion& operator-=(const Quaternion& q);
  friend Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
  friend Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
  friend Quaternion operator-(const Quaternion& q) { return {-q.a, -q.b, -q.c, -q.d}; }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  static QMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Quaternion& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

  QMatrix conjugate_transpose() const;
  QMatrix transpose() const;
  bool is_upper_triangular() const;
  bool is_unit_upper_triangular() const;
  /// Gauss-Jordan with left row operations. Throws SingularMatrix.
  QMatrix inverse() const;
  bool invertible() const;

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator+(const QMatrix& x, const QMatrix& y);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Quaternion> entries_;
};

using RowVector = std::vector<Quaternion>;

/// Dimension of the left H-span of the given rows.
std::size_t left_rank(std::vector<RowVector> rows);

/// Random rational with numerator in [-bound, bound] and denominator in [1, bound].
Rational random_rational(std::mt19937_64& rng, int bound = 10);
Quaternion random_quaternion(std::mt19937_64& rng, int bound = 10);
Quaternion random_nonzero_quaternion(std::mt19937_64& rng, int bound = 10);
/// Resamples until invertible.
QMatrix random_invertible(std::mt19937_64& rng, std::size_t n, int bound = 10);
QMatrix random_upper_triangular(std::mt19937_64& rng, std::size_t n, int bound = 10);

}  // namespace qflagk::quat
