#include "rcflab/exactalg/numbers.hpp"

#include <ostream>

#include "rcflab/errors.hpp"

namespace rcf {

BigRational parse_rational(const std::string& s) {
  BigRational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw DomainError("not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const BigRational& q) { return q.get_str(10); }

QuadExt QuadExt::inverse() const {
  BigRational n = norm();
  if (sgn(n) == 0) throw DomainError("inverse of zero in Q(sqrt2)");
  return QuadExt(a_ / n, -b_ / n);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  BigRational na = a_ * o.a_ + 2 * b_ * o.b_;
  BigRational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

std::string QuadExt::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string s;
  if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
  return s + b_.get_str() + "*sqrt2";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

}  // namespace rcf
