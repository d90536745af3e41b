#include "qflagk/flag.hpp"

#include <algorithm>

namespace qflagk::flag {

QMatrix perm_matrix(const Perm& tau) {
  const std::size_t n = tau.size();
  QMatrix p(n);
  for (std::size_t nu = 0; nu < n; ++nu) p(static_cast<std::size_t>(tau(nu)), nu) = Quaternion(1);
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> free_positions(const Perm& tau) {
  const Perm inv = tau.inverse();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t mu = 0; mu < tau.size(); ++mu)
    for (std::size_t nu = mu + 1; nu < tau.size(); ++nu)
      if (inv(mu) > inv(nu)) out.emplace_back(mu, nu);
  return out;
}

bool u_membership(const QMatrix& u, const Perm& tau) {
  if (u.size() != tau.size()) throw RankMismatch("matrix and permutation sizes differ");
  if (!u.is_unit_upper_triangular()) return false;
  const Perm inv = tau.inverse();
  for (std::size_t mu = 0; mu < u.size(); ++mu)
    for (std::size_t nu = mu + 1; nu < u.size(); ++nu)
      if (inv(mu) < inv(nu) && !u(mu, nu).is_zero()) return false;
  return true;
}

namespace {

// Right column operations by upper triangular matrices bring g to u * p_tau:
// column v ends with a 1 in row tau(v), zeros below it and zeros in the pivot
// rows of earlier columns. Returns that matrix and tau.
std::pair<QMatrix, Perm> reduce_columns(const QMatrix& g) {
  const std::size_t n = g.size();
  QMatrix m = g;
  std::vector<int> pivot_row(n, -1);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::size_t> earlier(col);
    for (std::size_t c = 0; c < col; ++c) earlier[c] = c;
    std::sort(earlier.begin(), earlier.end(),
              [&](std::size_t a, std::size_t b) { return pivot_row[a] > pivot_row[b]; });
    for (std::size_t c : earlier) {
      const auto r = static_cast<std::size_t>(pivot_row[c]);
      if (m(r, col).is_zero()) continue;
      const Quaternion factor = m(r, col);
      for (std::size_t row = 0; row < n; ++row)
        if (!m(row, c).is_zero()) m(row, col) -= m(row, c) * factor;
    }
    int lowest = -1;
    for (std::size_t row = n; row-- > 0;) {
      if (!m(row, col).is_zero()) {
        lowest = static_cast<int>(row);
        break;
      }
    }
    if (lowest < 0) throw SingularMatrix("matrix is not invertible");
    const Quaternion scale = m(static_cast<std::size_t>(lowest), col).inverse();
    for (std::size_t row = 0; row < n; ++row)
      if (!m(row, col).is_zero()) m(row, col) = m(row, col) * scale;
    pivot_row[col] = lowest;
  }
  return {std::move(m), Perm(pivot_row)};
}

// m * p_tau^{-1}: column v of m becomes column tau(v).
QMatrix unpermute_columns(const QMatrix& m, const Perm& tau) {
  QMatrix u(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t v = 0; v < m.size(); ++v) u(r, static_cast<std::size_t>(tau(v))) = m(r, v);
  return u;
}

}  // namespace

BruhatCell bruhat_cell(const QMatrix& g) {
  auto [m, tau] = reduce_columns(g);
  return {unpermute_columns(m, tau), std::move(tau)};
}

BruhatDecomposition bruhat_decompose(const QMatrix& g) {
  auto [m, tau] = reduce_columns(g);
  QMatrix u = unpermute_columns(m, tau);
  QMatrix b = m.inverse() * g;
  if (!u_membership(u, tau) || !b.is_upper_triangular() || u * perm_matrix(tau) * b != g)
    throw Error("Bruhat decomposition failed its recomposition check");
  return {std::move(u), std::move(tau), std::move(b)};
}

QMatrix conjugate_by_diagonal(const std::vector<Quaternion>& gamma, const QMatrix& u) {
  if (gamma.size() != u.size()) throw RankMismatch("diagonal length differs from matrix size");
  std::vector<Quaternion> inverses;
  inverses.reserve(gamma.size());
  for (const auto& q : gamma) inverses.push_back(q.inverse());
  QMatrix out(u.size());
  for (std::size_t mu = 0; mu < u.size(); ++mu)
    for (std::size_t nu = 0; nu < u.size(); ++nu) out(mu, nu) = gamma[mu] * u(mu, nu) * inverses[nu];
  return out;
}

FlagMatrix::FlagMatrix(QMatrix g) : g_(std::move(g)) {
  if (!g_.invertible()) throw SingularMatrix("flag matrix is not invertible");
}

std::size_t FlagMatrix::intersection_dim(std::size_t v, std::size_t m) const {
  const std::size_t n = size();
  if (v < 1 || v > n || m > n) throw OutOfRange("flag index out of range");
  // Spanning rows of V_v are e_k g^* = conjugated column k of g; project away
  // the first m coordinates and subtract the rank of the image.
  std::vector<quat::RowVector> rows(v, quat::RowVector(n - m));
  for (std::size_t k = 0; k < v; ++k)
    for (std::size_t c = m; c < n; ++c) rows[k][c - m] = g_(c, k).conjugate();
  return v - quat::left_rank(std::move(rows));
}

std::vector<std::size_t> FlagMatrix::jumps(std::size_t v) const {
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (std::size_t m = 1; m <= size(); ++m) {
    const std::size_t dim = intersection_dim(v, m);
    if (dim != prev) out.push_back(m);
    prev = dim;
  }
  return out;
}

Perm cell_index(const FlagMatrix& flag) {
  const std::size_t n = flag.size();
  std::vector<int> images;
  std::vector<std::size_t> previous;
  for (std::size_t v = 1; v <= n; ++v) {
    std::vector<std::size_t> current = flag.jumps(v);
    std::vector<std::size_t> added;
    std::set_difference(current.begin(), current.end(), previous.begin(), previous.end(),
                        std::back_inserter(added));
    if (added.size() != 1 || current.size() != v)
      throw Error("jump sets of consecutive subspaces are not nested");
    images.push_back(static_cast<int>(added.front()) - 1);
    previous = std::move(current);
  }
  return Perm(std::move(images));
}

bool closure_leq(const Perm& tau_prime, const Perm& tau) { return weyl::bruhat_leq(tau_prime, tau); }

CellDescriptor describe_cell(const Perm& tau) { return {tau, 4 * tau.inversions()}; }

QMatrix random_u(std::mt19937_64& rng, const Perm& tau, int bound) {
  QMatrix u = QMatrix::identity(tau.size());
  for (const auto& [mu, nu] : free_positions(tau)) u(mu, nu) = quat::random_quaternion(rng, bound);
  return u;
}

}  // namespace qflagk::flag
