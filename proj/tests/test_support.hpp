#pragma once

#include <fstream>
#include <random>
#include <string>

#include <nlohmann/json.hpp>

#include "rcflab/exactalg/poly.hpp"

namespace testing_support {

inline nlohmann::json golden() {
  std::ifstream in(std::string(RCFLAB_TEST_DATA_DIR) + "/golden.json");
  return nlohmann::json::parse(in);
}

inline rcf::ZPoly random_zpoly(std::mt19937_64& rng, int max_deg, long bound) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<long> cd(-bound, bound);
  const int d = dd(rng);
  std::vector<rcf::BigInt> c;
  for (int i = 0; i <= d; ++i) c.emplace_back(cd(rng));
  if (c.back() == 0) c.back() = 1;
  return rcf::ZPoly(std::move(c));
}

}  // namespace testing_support
