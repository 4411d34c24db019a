#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rcflab/cmnumeric/real.hpp"
#include "rcflab/exactalg/poly.hpp"

namespace rcf::cm {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Exact integral LLL with delta = 3/4 on linearly independent rows.
IntMatrix lll_reduce(IntMatrix basis);

// Minimal polynomial of an algebraic number of degree <= max_degree with
// coefficients bounded by height_bound. value(bits) must return the number to
// that many bits. Degrees are tried in increasing order with a lattice built at
// prec bits; a candidate is accepted only if it also vanishes at 2 prec bits.
std::optional<ZPoly> recognize_min_poly(const std::function<Complex(long)>& value,
                                        int max_degree, const BigInt& height_bound, long prec);
// Convenience form: x must carry at least 2 prec bits.
std::optional<ZPoly> recognize_min_poly(const Complex& x, int max_degree,
                                        const BigInt& height_bound, long prec);

// Suggested lattice precision: max_degree * log2(height_bound) * 4, at least 128.
long recognition_precision(int max_degree, const BigInt& height_bound);

Complex eval_poly(const ZPoly& p, const Complex& x);

}  // namespace rcf::cm
