#include "rcflab/exactalg/poly.hpp"

#include <sstream>

namespace rcf {

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.zero()) return p;
  BigInt g = content(p);
  if (sgn(p.lc()) < 0) g = -g;
  return divexact(p, ZPoly(g));
}

F2Poly reduce_mod2(const ZPoly& p) {
  return p.map<Gf2>([](const BigInt& c) { return reduce_mod2(c); });
}

QPoly to_q(const ZPoly& p) {
  return p.map<BigRational>([](const BigInt& c) { return BigRational(c); });
}

KPoly to_k(const ZPoly& p) {
  return p.map<QuadExt>([](const BigInt& c) { return QuadExt(c); });
}

KPoly to_k(const QPoly& p) {
  return p.map<QuadExt>([](const BigRational& c) { return QuadExt(c); });
}

KBiPoly to_k(const ZBiPoly& p) {
  return p.map<KPoly>([](const ZPoly& row) { return to_k(row); });
}

std::string to_string(const ZPoly& p, const std::string& var) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    BigInt a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace rcf
