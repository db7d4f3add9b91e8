/*
   Copyright 2026 The ordercert Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ORDERCERT_SUBRESULTANT_HPP
#define ORDERCERT_SUBRESULTANT_HPP

#include <stdexcept>
#include <utility>

#include "ordercert/poly.hpp"

namespace ordercert {

/// Resultant over an integral domain R by the subresultant PRS. Every
/// division performed is exact in R, so intermediate growth stays polynomial.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
  if (a.is_zero() || b.is_zero()) return R(0);
  int sign = 1;
  if (a.degree() < b.degree()) {
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    R r = ring_pow(b.lead(), a.degree());
    return sign < 0 ? R(-r) : r;
  }
  R g(1), h(1);
  for (;;) {
    const int da = a.degree();
    const int db = b.degree();
    const int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
    Poly<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return R(0);
    b = exact_div_scalar(r, R(g * ring_pow(h, delta)));
    g = a.lead();
    if (delta != 0) h = exact_div(R(ring_pow(g, delta)), R(ring_pow(h, delta - 1)));
    if (b.degree() == 0) {
      const int d = a.degree();
      R res = exact_div(R(ring_pow(b.lead(), d)), R(ring_pow(h, d - 1)));
      return sign < 0 ? R(-res) : res;
    }
  }
}

/// disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f); requires deg f >= 1.
template <class R>
R discriminant(const Poly<R>& f) {
  const int d = f.degree();
  if (d < 1) throw std::domain_error("discriminant: degree must be at least 1");
  R r = exact_div(resultant(f, f.derivative()), f.lead());
  return (d * (d - 1) / 2) % 2 == 0 ? r : R(-r);
}

}  // namespace ordercert

#endif
