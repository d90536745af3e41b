#pragma once

// Bruhat cells of the quaternionic flag manifold GL_n(H)/B.
//
// A flag is represented by an invertible matrix g: V_v is the left H-span of
// the images of e_1..e_v, i.e. of the conjugated columns 1..v of g.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "qflagk/quaternion.hpp"
#include "qflagk/weyl.hpp"

namespace qflagk::flag {

using quat::QMatrix;
using quat::Quaternion;
using weyl::Perm;

/// Entry (mu, nu) is 1 iff mu = tau(nu); the flag of p_tau is
/// (H e_tau(1) + ... + H e_tau(v))_v.
QMatrix perm_matrix(const Perm& tau);

/// Positions (mu, nu), mu < nu, where a member of U_tau may be nonzero:
/// tau^{-1}(mu) > tau^{-1}(nu). There are exactly inversions(tau) of them.
std::vector<std::pair<std::size_t, std::size_t>> free_positions(const Perm& tau);

/// u is unit upper triangular and (p_tau^{-1} u p_tau)^t is unit upper
/// triangular, i.e. u vanishes off the diagonal except at free_positions(tau).
bool u_membership(const QMatrix& u, const Perm& tau);

struct BruhatDecomposition {
  QMatrix u;
  Perm tau;
  QMatrix b;
};

/// g = u * p_tau * b with u in U_tau and b upper triangular invertible.
/// Throws SingularMatrix.
BruhatDecomposition bruhat_decompose(const QMatrix& g);

/// The (u, tau) part of bruhat_decompose without forming b or re-checking;
/// for comparing cells of many matrices.
struct BruhatCell {
  QMatrix u;
  Perm tau;
};
BruhatCell bruhat_cell(const QMatrix& g);

/// Entry (mu, nu) becomes gamma_mu * u_{mu nu} * gamma_nu^{-1}.
QMatrix conjugate_by_diagonal(const std::vector<Quaternion>& gamma, const QMatrix& u);

class FlagMatrix {
 public:
  /// Throws SingularMatrix.
  explicit FlagMatrix(QMatrix g);
  const QMatrix& matrix() const { return g_; }
  std::size_t size() const { return g_.size(); }
  /// dim_H (V_v intersect H^m), 1 <= v <= n, 0 <= m <= n.
  std::size_t intersection_dim(std::size_t v, std::size_t m) const;
  /// s(V_v) as 1-based jump positions.
  std::vector<std::size_t> jumps(std::size_t v) const;

 private:
  QMatrix g_;
};

Perm cell_index(const FlagMatrix& flag);

/// C_{tau'} lies in the closure of C_tau.
bool closure_leq(const Perm& tau_prime, const Perm& tau);

struct CellDescriptor {
  Perm tau;
  std::size_t dimension = 0;  // real dimension 4 * l(tau)
};

CellDescriptor describe_cell(const Perm& tau);

/// Random member of U_tau; free entries are random_quaternion(rng, bound).
QMatrix random_u(std::mt19937_64& rng, const Perm& tau, int bound = 10);

}  // namespace qflagk::flag
