#include "rcflab/qseries/cyclo8.hpp"

#include "rcflab/errors.hpp"

namespace rcf {

Cyclo8 Cyclo8::zeta(long k) {
  long r = ((k % 8) + 8) % 8;
  Cyclo8 z;
  if (r < 4)
    z.c_[static_cast<std::size_t>(r)] = 1;
  else
    z.c_[static_cast<std::size_t>(r - 4)] = -1;
  return z;
}

bool Cyclo8::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Cyclo8::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

Cyclo8 Cyclo8::galois(int k) const {
  if (k % 2 == 0) throw DomainError("Galois exponent must be odd");
  Cyclo8 r;
  for (int j = 0; j < 4; ++j) {
    if (sgn(c_[static_cast<std::size_t>(j)]) == 0) continue;
    r += Cyclo8(c_[static_cast<std::size_t>(j)]) * zeta(static_cast<long>(j) * k);
  }
  return r;
}

Cyclo8 Cyclo8::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(zeta8)");
  if (is_rational()) return Cyclo8(BigRational(1 / c_[0]));
  Cyclo8 others = galois(3) * galois(5) * galois(7);
  Cyclo8 n = *this * others;
  return others * Cyclo8(BigRational(1 / n.c_[0]));
}

Cyclo8& Cyclo8::operator+=(const Cyclo8& o) {
  for (std::size_t j = 0; j < 4; ++j) c_[j] += o.c_[j];
  return *this;
}

Cyclo8& Cyclo8::operator-=(const Cyclo8& o) {
  for (std::size_t j = 0; j < 4; ++j) c_[j] -= o.c_[j];
  return *this;
}

Cyclo8& Cyclo8::operator*=(const Cyclo8& o) {
  if (o.is_rational()) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  std::array<BigRational, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      BigRational t = c_[i] * o.c_[j];
      if (i + j < 4)
        r[i + j] += t;
      else
        r[i + j - 4] -= t;
    }
  }
  c_ = std::move(r);
  return *this;
}

Cyclo8 Cyclo8::operator-() const {
  Cyclo8 r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string Cyclo8::str() const {
  static const char* names[4] = {"", "*z", "*z^2", "*z^3"};
  std::string s;
  for (std::size_t j = 0; j < 4; ++j) {
    if (sgn(c_[j]) == 0) continue;
    if (!s.empty() && sgn(c_[j]) > 0) s += "+";
    s += c_[j].get_str() + names[j];
  }
  return s.empty() ? "0" : s;
}

}  // namespace rcf
