#pragma once

#include <array>
#include <string>

#include "rcflab/exactalg/numbers.hpp"

namespace rcf {

// Element of Q(zeta8) in the basis 1, z, z^2, z^3 with z^4 = -1.
class Cyclo8 {
 public:
  Cyclo8() = default;
  Cyclo8(long a) { c_[0] = a; }
  Cyclo8(const BigRational& a) { c_[0] = a; }
  Cyclo8(BigRational a0, BigRational a1, BigRational a2, BigRational a3)
      : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  // zeta8^k for any integer k.
  static Cyclo8 zeta(long k);
  static Cyclo8 sqrt2() { return zeta(1) - zeta(3); }
  static Cyclo8 i() { return zeta(2); }

  const BigRational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  bool is_zero() const;
  bool is_rational() const;

  // zeta -> zeta^k for k odd.
  Cyclo8 galois(int k) const;
  Cyclo8 inverse() const;

  Cyclo8& operator+=(const Cyclo8& o);
  Cyclo8& operator-=(const Cyclo8& o);
  Cyclo8& operator*=(const Cyclo8& o);
  Cyclo8& operator/=(const Cyclo8& o) { return *this *= o.inverse(); }
  friend Cyclo8 operator+(Cyclo8 a, const Cyclo8& b) { return a += b; }
  friend Cyclo8 operator-(Cyclo8 a, const Cyclo8& b) { return a -= b; }
  friend Cyclo8 operator*(Cyclo8 a, const Cyclo8& b) { return a *= b; }
  friend Cyclo8 operator/(Cyclo8 a, const Cyclo8& b) { return a /= b; }
  Cyclo8 operator-() const;
  friend bool operator==(const Cyclo8& a, const Cyclo8& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyclo8& a, const Cyclo8& b) { return !(a == b); }

  std::string str() const;

 private:
  std::array<BigRational, 4> c_{};
};

inline bool is_zero(const Cyclo8& x) { return x.is_zero(); }
inline Cyclo8 divexact(const Cyclo8& a, const Cyclo8& b) { return a / b; }

}  // namespace rcf
