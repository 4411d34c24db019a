#pragma once

// Evaluation-interpolation route to R^(n)(x, t), built only on Sylvester determinants.

#include <map>

#include "linalg_oracle.hpp"

namespace oracle {

// f(a, b) = a^2 b + a^2 + b^2 - b
inline mpz_class f_value(const mpz_class& a, const mpz_class& b) {
  return a * a * b + a * a + b * b - b;
}

// R^(k)(a, y) as an integer polynomial in y (degree 2^k).
inline std::vector<mpz_class> iterated_in_t(int k, const mpz_class& a) {
  if (k == 1) {
    // a^2 y + a^2 + y^2 - y
    return {a * a, a * a - 1, 1};
  }
  const std::vector<mpz_class> prev = iterated_in_t(k - 1, a);
  const int dprev = 1 << (k - 1);
  const int deg = 1 << k;
  std::vector<mpq_class> xs, ys;
  for (int j = 0; j <= deg; ++j) {
    mpz_class b = j - deg / 2;
    // f(y, b) = (b + 1) y^2 + (b^2 - b)
    std::vector<mpz_class> q{b * b - b, 0, b + 1};
    xs.emplace_back(b);
    ys.emplace_back(sylvester_resultant(prev, dprev, q, 2));
  }
  return to_integers(interpolate(xs, ys));
}

// Full R^(n)(x, t): result[i][j] is the coefficient of x^i t^j.
inline std::vector<std::vector<mpz_class>> iterated_full(int n) {
  const int deg = 1 << n;
  std::vector<mpq_class> xs;
  std::vector<std::vector<mpz_class>> rows;
  for (int i = 0; i <= deg; ++i) {
    mpz_class a = i - deg / 2;
    xs.emplace_back(a);
    rows.push_back(iterated_in_t(n, a));
  }
  std::vector<std::vector<mpz_class>> out(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j <= deg; ++j) {
    std::vector<mpq_class> ys;
    for (const auto& r : rows) ys.emplace_back(j < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(j)] : mpz_class(0));
    std::vector<mpz_class> col = to_integers(interpolate(xs, ys));
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (out[i].size() <= static_cast<std::size_t>(j)) out[i].resize(static_cast<std::size_t>(j) + 1, 0);
      out[i][static_cast<std::size_t>(j)] = col[i];
    }
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  for (auto& r : out)
    while (!r.empty() && r.back() == 0) r.pop_back();
  return out;
}

}  // namespace oracle
