#include "qflagk/oracle.hpp"

#include "qflagk/error.hpp"

namespace qflagk::oracle {

bool rank_matrix_leq(const weyl::Perm& v, const weyl::Perm& w) {
  const std::size_t n = v.size();
  if (w.size() != n) throw RankMismatch("permutation sizes differ");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int cv = 0, cw = 0;
      for (std::size_t a = 0; a <= i; ++a) {
        cv += v(a) >= static_cast<int>(j);
        cw += w(a) >= static_cast<int>(j);
      }
      if (cv > cw) return false;
    }
  return true;
}

}  // namespace qflagk::oracle
