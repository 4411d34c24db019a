#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rcflab/exactalg/numbers.hpp"
#include "rcflab/exactalg/poly.hpp"

namespace rcf::padic {

using Word = unsigned __int128;

// Z_2[x]/(M(x)) modulo 2^P, M the least irreducible polynomial of degree m
// over F_2 (bit patterns compared as integers), lifted to 0/1 coefficients.
class Context {
 public:
  static std::shared_ptr<const Context> make(int m, int P);

  int m() const { return m_; }
  int P() const { return P_; }
  // Ascending 0/1 coefficients, length m + 1, leading 1.
  const std::vector<int>& modulus() const { return modulus_; }
  // Modulus as a bit pattern (bit i = coefficient of x^i).
  unsigned long modulus_bits() const { return bits_; }
  Word mask() const { return mask_; }
  std::string modulus_string() const;

 private:
  Context(int m, int P, unsigned long bits);
  int m_;
  int P_;
  unsigned long bits_;
  std::vector<int> modulus_;
  Word mask_;
};

using ContextPtr = std::shared_ptr<const Context>;

// Least irreducible polynomial of degree m over F_2 as a bit pattern.
unsigned long least_irreducible(int m);
bool irreducible_gf2(unsigned long bits);

// Multiplication in F_2[x]/(mod) on bit patterns.
unsigned long gf2m_mul(unsigned long a, unsigned long b, unsigned long mod, int m);

class Elem {
 public:
  explicit Elem(ContextPtr ctx);
  static Elem from_int(ContextPtr ctx, const BigInt& a);
  static Elem from_coeffs(ContextPtr ctx, const std::vector<BigInt>& c);
  // Coefficients 0/1 given by the bits of r.
  static Elem from_residue(ContextPtr ctx, unsigned long r);

  const ContextPtr& ctx() const { return ctx_; }
  const std::vector<Word>& coeffs() const { return c_; }
  // Minimum 2-adic valuation of the coefficients; P for zero.
  int valuation() const;
  bool is_unit() const { return valuation() == 0; }
  unsigned long residue() const;

  Elem inverse() const;
  // Exact division by 2; the top bit becomes unknown and is set to zero.
  Elem half() const;
  Elem pow(unsigned long e) const;

  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
  Elem operator-() const;
  Elem scaled(const BigInt& k) const;
  friend bool operator==(const Elem& a, const Elem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  std::vector<BigInt> to_bigints() const;
  std::string str() const;

 private:
  void check_same(const Elem& o) const;
  void reduce_mask();
  ContextPtr ctx_;
  std::vector<Word> c_;
};

Word to_word(const BigInt& a, Word mask);
BigInt from_word(Word w);

Elem eval_poly(const ZPoly& p, const Elem& x);

}  // namespace rcf::padic
