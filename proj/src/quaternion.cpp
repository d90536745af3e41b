#include "qflagk/quaternion.hpp"

#include <utility>

namespace qflagk::quat {

Quaternion Quaternion::inverse() const {
  const Rational n2 = norm2();
  if (n2 == 0) throw SingularMatrix("inverse of the zero quaternion");
  return {a / n2, -b / n2, -c / n2, -d / n2};
}

Quaternion& Quaternion::operator+=(const Quaternion& q) {
  a += q.a;
  b += q.b;
  c += q.c;
  d += q.d;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& q) {
  a -= q.a;
  b -= q.b;
  c -= q.c;
  d -= q.d;
  return *this;
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion(1);
  return m;
}

QMatrix QMatrix::conjugate_transpose() const {
  QMatrix m(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c).conjugate();
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

bool QMatrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (!(*this)(r, c).is_zero()) return false;
  return true;
}

bool QMatrix::is_unit_upper_triangular() const {
  if (!is_upper_triangular()) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if ((*this)(i, i) != Quaternion(1)) return false;
  return true;
}

QMatrix QMatrix::inverse() const {
  QMatrix work = *this;
  QMatrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) throw SingularMatrix("matrix is not invertible");
    if (pivot != col) {
      for (std::size_t c = 0; c < n_; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Quaternion scale = work(col, col).inverse();
    for (std::size_t c = 0; c < n_; ++c) {
      work(col, c) = scale * work(col, c);
      inv(col, c) = scale * inv(col, c);
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Quaternion factor = work(r, col);
      for (std::size_t c = 0; c < n_; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

bool QMatrix::invertible() const {
  std::vector<RowVector> rows(n_, RowVector(n_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) rows[r][c] = (*this)(r, c);
  return left_rank(std::move(rows)) == n_;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.size() != y.size()) throw RankMismatch("matrix sizes differ");
  const std::size_t n = x.size();
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (x(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) m(r, c) += x(r, k) * y(k, c);
    }
  return m;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
  if (x.size() != y.size()) throw RankMismatch("matrix sizes differ");
  QMatrix m = x;
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) m(r, c) += y(r, c);
  return m;
}

std::size_t left_rank(std::vector<RowVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Quaternion scale = rows[rank][col].inverse();
    for (auto& q : rows[rank]) q = scale * q;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Quaternion factor = rows[r][col];
      for (std::size_t c = 0; c < width; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

Rational random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  const int p = num(rng);
  const int q = den(rng);
  return Rational(p, q);
}

Quaternion random_quaternion(std::mt19937_64& rng, int bound) {
  Rational a = random_rational(rng, bound);
  Rational b = random_rational(rng, bound);
  Rational c = random_rational(rng, bound);
  Rational d = random_rational(rng, bound);
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

Quaternion random_nonzero_quaternion(std::mt19937_64& rng, int bound) {
  while (true) {
    Quaternion q = random_quaternion(rng, bound);
    if (!q.is_zero()) return q;
  }
}

QMatrix random_invertible(std::mt19937_64& rng, std::size_t n, int bound) {
  while (true) {
    QMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_quaternion(rng, bound);
    if (m.invertible()) return m;
  }
}

QMatrix random_upper_triangular(std::mt19937_64& rng, std::size_t n, int bound) {
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = random_nonzero_quaternion(rng, bound);
    for (std::size_t c = r + 1; c < n; ++c) m(r, c) = random_quaternion(rng, bound);
  }
  return m;
}

}  // namespace qflagk::quat
