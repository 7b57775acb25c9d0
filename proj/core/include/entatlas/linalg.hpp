#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "entatlas/scalar.hpp"

namespace entatlas {

template <class R>
using Matrix = std::vector<std::vector<R>>;

// Exact rank by Gaussian elimination.
int exact_rank(Matrix<Scalar> rows);

// Leibniz expansion; works over any commutative ring (small sizes only).
template <class R>
R leibniz_det(const Matrix<R>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  R total{};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    R term = m[0][perm[0]];
    for (std::size_t i = 1; i < n; ++i) term = term * m[i][perm[i]];
    if (inversions % 2)
      total = total - term;
    else
      total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace entatlas
