#include "rcflab/padic2/unramified.hpp"

#include <bit>
#include <sstream>

#include "rcflab/errors.hpp"

namespace rcf::padic {

namespace {

int bit_degree(unsigned long a) { return a == 0 ? -1 : 63 - std::countl_zero(a); }

unsigned long gf2_mod(unsigned long a, unsigned long b) {
  const int db = bit_degree(b);
  for (int da = bit_degree(a); da >= db; da = bit_degree(a)) a ^= b << (da - db);
  return a;
}

int ctz_word(Word w) {
  const auto lo = static_cast<unsigned long long>(w);
  if (lo != 0) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<unsigned long long>(w >> 64));
}

}  // namespace

bool irreducible_gf2(unsigned long bits) {
  const int d = bit_degree(bits);
  if (d < 1) return false;
  for (unsigned long f = 2; bit_degree(f) <= d / 2; ++f)
    if (gf2_mod(bits, f) == 0) return false;
  return true;
}

unsigned long least_irreducible(int m) {
  if (m < 1 || m > 24) throw DomainError("residue degree must be in [1, 24]");
  for (unsigned long b = 1UL << m; b < (2UL << m); ++b)
    if (irreducible_gf2(b)) return b;
  throw InternalError("no irreducible polynomial found");
}

unsigned long gf2m_mul(unsigned long a, unsigned long b, unsigned long mod, int m) {
  unsigned long r = 0;
  while (b) {
    if (b & 1UL) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> m & 1UL) a ^= mod;
  }
  return r;
}

Context::Context(int m, int P, unsigned long bits) : m_(m), P_(P), bits_(bits) {
  for (int i = 0; i <= m; ++i) modulus_.push_back(static_cast<int>(bits >> i & 1UL));
  mask_ = P == 128 ? ~Word(0) : (Word(1) << P) - 1;
}

std::shared_ptr<const Context> Context::make(int m, int P) {
  if (P < 8 || P > 128) throw DomainError("precision P must be in [8, 128]");
  return std::shared_ptr<const Context>(new Context(m, P, least_irreducible(m)));
}

std::string Context::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = m_; i >= 0; --i) {
    if (!modulus_[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) os << "1";
    else if (i == 1) os << "x";
    else os << "x^" << i;
  }
  return os.str();
}

Word to_word(const BigInt& a, Word mask) {
  BigInt r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), a.get_mpz_t(), 128);
  BigInt hi = r >> 64;
  BigInt lo = r - (hi << 64);
  const Word w = (Word(mpz_get_ui(hi.get_mpz_t())) << 64) | Word(mpz_get_ui(lo.get_mpz_t()));
  return w & mask;
}

BigInt from_word(Word w) {
  BigInt hi(static_cast<unsigned long>(w >> 64));
  BigInt lo(static_cast<unsigned long>(static_cast<unsigned long long>(w)));
  return (hi << 64) + lo;
}

Elem::Elem(ContextPtr ctx) : ctx_(std::move(ctx)), c_(ctx_->m(), 0) {}

Elem Elem::from_int(ContextPtr ctx, const BigInt& a) {
  Elem e(std::move(ctx));
  e.c_[0] = to_word(a, e.ctx_->mask());
  return e;
}

Elem Elem::from_coeffs(ContextPtr ctx, const std::vector<BigInt>& c) {
  Elem e(std::move(ctx));
  if (static_cast<int>(c.size()) != e.ctx_->m())
    throw DomainError("coefficient vector length must equal the residue degree");
  for (std::size_t i = 0; i < c.size(); ++i) e.c_[i] = to_word(c[i], e.ctx_->mask());
  return e;
}

Elem Elem::from_residue(ContextPtr ctx, unsigned long r) {
  Elem e(std::move(ctx));
  if (bit_degree(r) >= e.ctx_->m()) throw DomainError("residue out of range");
  for (int i = 0; i < e.ctx_->m(); ++i) e.c_[i] = r >> i & 1UL;
  return e;
}

int Elem::valuation() const {
  int v = ctx_->P();
  for (Word w : c_)
    if (w != 0) v = std::min(v, ctz_word(w));
  return v;
}

unsigned long Elem::residue() const {
  unsigned long r = 0;
  for (int i = 0; i < ctx_->m(); ++i)
    if (static_cast<unsigned long>(c_[i] & 1)) r |= 1UL << i;
  return r;
}

void Elem::check_same(const Elem& o) const {
  if (ctx_ != o.ctx_ && (ctx_->m() != o.ctx_->m() || ctx_->P() != o.ctx_->P() ||
                         ctx_->modulus_bits() != o.ctx_->modulus_bits()))
    throw ConsistencyError("elements belong to different contexts");
}

void Elem::reduce_mask() {
  for (Word& w : c_) w &= ctx_->mask();
}

Elem& Elem::operator+=(const Elem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  reduce_mask();
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  reduce_mask();
  return *this;
}

Elem& Elem::operator*=(const Elem& o) {
  check_same(o);
  const int m = ctx_->m();
  std::vector<Word> t(2 * m - 1, 0);
  for (int i = 0; i < m; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < m; ++j) t[i + j] += c_[i] * o.c_[j];
  }
  const auto& M = ctx_->modulus();
  for (int k = 2 * m - 2; k >= m; --k) {
    const Word q = t[k];
    if (q == 0) continue;
    for (int i = 0; i < m; ++i)
      if (M[i]) t[k - m + i] -= q;
  }
  for (int i = 0; i < m; ++i) c_[i] = t[i];
  reduce_mask();
  return *this;
}

Elem Elem::operator-() const {
  Elem r(ctx_);
  return r -= *this;
}

Elem Elem::scaled(const BigInt& k) const {
  const Word w = to_word(k, ctx_->mask());
  Elem r = *this;
  for (Word& c : r.c_) c *= w;
  r.reduce_mask();
  return r;
}

Elem Elem::pow(unsigned long e) const {
  Elem r = from_int(ctx_, 1), b = *this;
  while (e) {
    if (e & 1UL) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Elem Elem::inverse() const {
  if (!is_unit()) throw DomainError("inverse of a non-unit");
  const int m = ctx_->m();
  const unsigned long mod = ctx_->modulus_bits();
  // a^(2^m - 2) in the residue field
  const unsigned long a = residue();
  unsigned long r = 1, b = a;
  for (unsigned long e = (1UL << m) - 2; e; e >>= 1) {
    if (e & 1UL) r = gf2m_mul(r, b, mod, m);
    b = gf2m_mul(b, b, mod, m);
  }
  Elem y = from_residue(ctx_, r);
  const Elem two = from_int(ctx_, 2);
  for (int prec = 1; prec < ctx_->P(); prec *= 2) y = y * (two - *this * y);
  if (*this * y != from_int(ctx_, 1)) throw InternalError("inverse did not converge");
  return y;
}

Elem Elem::half() const {
  Elem r = *this;
  for (Word& w : r.c_) {
    if (w & 1) throw DomainError("half of an element with an odd coefficient");
    w >>= 1;
  }
  return r;
}

std::vector<BigInt> Elem::to_bigints() const {
  std::vector<BigInt> out;
  for (Word w : c_) out.push_back(from_word(w));
  return out;
}

std::string Elem::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << from_word(c_[i]).get_str();
  os << "] mod 2^" << ctx_->P();
  return os.str();
}

Elem eval_poly(const ZPoly& p, const Elem& x) {
  Elem r(x.ctx());
  for (int k = p.degree(); k >= 0; --k) {
    r *= x;
    r += Elem::from_int(x.ctx(), p.coeff(k));
  }
  return r;
}

}  // namespace rcf::padic
