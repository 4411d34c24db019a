#pragma once

#include "rcflab/exactalg/poly.hpp"

namespace rcf {

// Res(a, b) by the subresultant PRS (Cohen, Alg. 3.3.7) over an integral domain R.
// Matches the Sylvester determinant, so Res(b, a) = (-1)^(deg a * deg b) Res(a, b).
template <class R>
R resultant(UniPoly<R> a, UniPoly<R> b) {
  if (a.zero() || b.zero()) throw DomainError("resultant of a zero polynomial");
  R sign(1L);
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
  }
  if (b.degree() == 0) return sign * ring_pow(b.lc(), static_cast<unsigned>(a.degree()));
  R g(1L), h(1L);
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    UniPoly<R> r = prem(a, b);
    a = std::move(b);
    if (r.zero()) return R(0L);
    // r / (g * h^delta)
    R div = g * ring_pow(h, static_cast<unsigned>(delta));
    b = divexact(r, UniPoly<R>(div));
    g = a.lc();
    if (delta == 0) {
      // h unchanged: h^(1-0) g^0 = h
    } else if (delta == 1) {
      h = g;
    } else {
      h = divexact(ring_pow(g, static_cast<unsigned>(delta)),
                   ring_pow(h, static_cast<unsigned>(delta - 1)));
    }
    if (b.degree() == 0) {
      const int da = a.degree();
      R num = ring_pow(b.lc(), static_cast<unsigned>(da));
      R res = da >= 1 ? divexact(num, ring_pow(h, static_cast<unsigned>(da - 1))) : num;
      return sign * res;
    }
  }
}

// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p), over a field.
template <class R>
R discriminant(const UniPoly<R>& p) {
  const int n = p.degree();
  if (n < 1) throw DomainError("discriminant needs degree >= 1");
  if (n == 1) return R(1L);
  R r = resultant(p, p.derivative());
  r = divexact(r, p.lc());
  if (((n * (n - 1)) / 2) & 1) r = -r;
  return r;
}

}  // namespace rcf
