#pragma once

// Rational Gram-Schmidt for checking LLL output.

#include <vector>

#include "rcflab/exactalg/numbers.hpp"

namespace oracle {

struct GramSchmidt {
  std::vector<rcf::BigRational> bstar_sq;
  std::vector<std::vector<rcf::BigRational>> mu;
};

inline GramSchmidt gram_schmidt(const std::vector<std::vector<rcf::BigInt>>& b) {
  const std::size_t n = b.size();
  GramSchmidt g;
  g.mu.assign(n, std::vector<rcf::BigRational>(n));
  std::vector<std::vector<rcf::BigRational>> bs(n);
  for (std::size_t i = 0; i < n; ++i) {
    bs[i].assign(b[i].begin(), b[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      rcf::BigRational dotv = 0;
      for (std::size_t c = 0; c < b[i].size(); ++c) dotv += rcf::BigRational(b[i][c]) * bs[j][c];
      g.mu[i][j] = dotv / g.bstar_sq[j];
      for (std::size_t c = 0; c < b[i].size(); ++c) bs[i][c] -= g.mu[i][j] * bs[j][c];
    }
    rcf::BigRational n2 = 0;
    for (const auto& x : bs[i]) n2 += x * x;
    g.bstar_sq.push_back(n2);
  }
  return g;
}

}  // namespace oracle
