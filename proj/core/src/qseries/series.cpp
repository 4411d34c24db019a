#include "rcflab/qseries/series.hpp"

#include <sstream>

namespace rcf {

namespace series_detail {

long to_long(const BigInt& z) {
  if (!z.fits_slong_p()) throw DomainError("exponent out of range");
  return z.get_si();
}

long ceil_long(const BigRational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return to_long(q);
}

long exact_long(const BigRational& x) {
  if (x.get_den() != 1) throw InternalError("exponent not on the lattice");
  return to_long(x.get_num());
}

long lcm(long a, long b) { return std::lcm(a, b); }

}  // namespace series_detail

QSeries to_rational(const CSeries& s) {
  return s.map<BigRational>([](const Cyclo8& x) {
    if (!x.is_rational()) throw DomainError("series has irrational coefficients");
    return x[0];
  });
}

namespace {

std::string exp_str(const BigRational& e) {
  if (e == 1) return "q";
  std::string s = e.get_str();
  if (e.get_den() != 1) s = "(" + s + ")";
  return "q^" + s;
}

template <class C, class Str>
std::string render(const Puiseux<C>& s, std::size_t max_terms, Str str) {
  std::ostringstream out;
  std::size_t shown = 0;
  bool more = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_zero(s.coeffs()[i])) continue;
    if (shown == max_terms) {
      more = true;
      break;
    }
    BigRational e = s.exponent(i);
    std::string c = str(s.coeffs()[i]);
    bool simple = c.find('*') == std::string::npos && c.find('+') == std::string::npos &&
                  c.find('-', 1) == std::string::npos;
    if (shown > 0) {
      if (simple && c[0] == '-') {
        out << " - ";
        c = c.substr(1);
      } else {
        out << " + ";
      }
    }
    if (sgn(e) == 0)
      out << c;
    else if (c == "1")
      out << exp_str(e);
    else if (c == "-1")
      out << "-" << exp_str(e);
    else
      out << (simple ? c : "(" + c + ")") << "*" << exp_str(e);
    ++shown;
  }
  if (more) out << (shown ? " + ..." : "...");
  if (s.order()) out << (shown || more ? " + " : "") << "O(" << exp_str(*s.order()) << ")";
  if (!shown && !more && !s.order()) out << "0";
  return out.str();
}

}  // namespace

std::string to_string(const QSeries& s, std::size_t max_terms) {
  return render(s, max_terms, [](const BigRational& x) { return x.get_str(); });
}

std::string to_string(const CSeries& s, std::size_t max_terms) {
  return render(s, max_terms, [](const Cyclo8& x) { return x.str(); });
}

}  // namespace rcf
