#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rcflab/qseries/series.hpp"

namespace rcf::qs {

// One summand c * value of an identity sum_k c_k T_k = 0.
struct Term {
  BigInt coeff;
  CSeries value;
};

struct IdentityRecord {
  std::string id;
  std::string description;
  // Terms built modulo q^order (at least).
  std::function<std::vector<Term>(const BigRational& order)> terms;
};

// Add delta to the integer multiplier of one term.
struct Mutation {
  std::size_t term = 0;
  long delta = 1;
};

struct IdentityReport {
  std::string id;
  bool passed = false;
  // The requested order is below the point where truncation noise could show.
  bool low_order = false;
  BigRational order;
  CSeries residual;
  std::optional<BigRational> first_bad_exponent;
  std::optional<Cyclo8> first_bad_coefficient;
};

const std::vector<IdentityRecord>& catalog();
const IdentityRecord& find_identity(const std::string& id);

// Residual sum_k c_k T_k modulo q^order; passes when it vanishes there.
IdentityReport verify_identity(const std::string& id, const BigRational& order,
                               std::optional<Mutation> mutation = std::nullopt);
IdentityReport verify_identity(const IdentityRecord& rec, const BigRational& order,
                               std::optional<Mutation> mutation = std::nullopt);

// Orders below this are reported as low-order passes.
inline const BigRational kLowOrder{10};

}  // namespace rcf::qs
