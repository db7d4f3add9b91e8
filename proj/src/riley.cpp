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

#include "ordercert/riley.hpp"

#include "ordercert/errors.hpp"

namespace ordercert {

namespace {

BivarPoly mono(long c, int m_power, int s_power = 0) {
  return BivarPoly::monomial(IntLaurent::monomial(c, m_power), s_power);
}

}  // namespace

SymMat2 SymMat2::identity() { return {mono(1, 0), {}, {}, mono(1, 0)}; }

BivarPoly SymMat2::det() const { return a11 * a22 - a12 * a21; }

SymMat2 operator*(const SymMat2& a, const SymMat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

const SymMat2& GeneratorImages::of(const Letter& l) const {
  if (l.gen == Generator::x) return l.exponent > 0 ? x : x_inv;
  return l.exponent > 0 ? y : y_inv;
}

const GeneratorImages& generator_images() {
  static const GeneratorImages images{
      {mono(1, 1), mono(1, 0), {}, mono(1, -1)},
      {mono(1, 1), {}, mono(1, 0, 1), mono(1, -1)},
      {mono(1, -1), mono(-1, 0), {}, mono(1, 1)},
      {mono(1, -1), {}, mono(-1, 0, 1), mono(1, 1)},
  };
  return images;
}

namespace {

BivarPoly shift_m(BivarPoly p, int k) {
  p.transform([k](IntLaurent& c) { c.shift_in_place(k); });
  return p;
}

}  // namespace

SymMat2 times_generator(SymMat2 a, const Letter& l) {
  const int e = l.exponent;
  if (l.gen == Generator::x) {
    // [[m^e, e], [0, m^-e]]
    BivarPoly c12 = e > 0 ? a.a11 : -a.a11;
    c12 += shift_m(std::move(a.a12), -e);
    BivarPoly c22 = e > 0 ? a.a21 : -a.a21;
    c22 += shift_m(std::move(a.a22), -e);
    return {shift_m(std::move(a.a11), e), std::move(c12), shift_m(std::move(a.a21), e),
            std::move(c22)};
  }
  // [[m^e, 0], [e s, m^-e]]
  BivarPoly c11 = shift_m(std::move(a.a11), e);
  BivarPoly c21 = shift_m(std::move(a.a21), e);
  BivarPoly t12 = a.a12.shifted(1);
  BivarPoly t22 = a.a22.shifted(1);
  if (e > 0) {
    c11 += t12;
    c21 += t22;
  } else {
    c11 -= t12;
    c21 -= t22;
  }
  return {std::move(c11), shift_m(std::move(a.a12), -e), std::move(c21),
          shift_m(std::move(a.a22), -e)};
}

SymMat2 holonomy_word(const KnotWord& w) {
  SymMat2 acc = SymMat2::identity();
  for (const auto& l : w) acc = times_generator(std::move(acc), l);
  return acc;
}

SymMat2 holonomy_word(const TwoBridgeKnot& k) { return holonomy_word(relator_word(k)); }

RileyPolynomial riley_polynomial_unchecked(const TwoBridgeKnot& k) {
  const SymMat2 w = holonomy_word(k);
  const BivarPoly factor(IntLaurent::monomial(1, -1) - IntLaurent::monomial(1, 1));
  RileyPolynomial r;
  r.knot = k;
  r.phi = w.a11 + factor * w.a12;

  const int half = (k.p - 1) / 2;
  const bool lead_unit = !r.phi.is_zero() && (r.phi.lead().is_constant(1) || r.phi.lead().is_constant(-1));
  r.report.degree_ok = s_degree(r.phi) == half && lead_unit;
  if (lead_unit && r.phi.lead().is_constant(-1)) {
    r.phi = -r.phi;
    r.sign_flipped = true;
  }
  r.report.nonvanishing_ok = !value_at_one_zero(r.phi).is_zero();
  r.report.symmetric_ok = mirror(r.phi) == r.phi;
  if (r.report.symmetric_ok && !r.phi.is_zero()) {
    r.cos_form = to_cos_form(r.phi);
    r.report.squarefree_ok = squarefree_in_s(r.cos_form);
  }
  return r;
}

RileyPolynomial riley_polynomial(const TwoBridgeKnot& k) {
  RileyPolynomial r = riley_polynomial_unchecked(k);
  if (!r.report.all())
    throw PropertyViolation("Riley polynomial of " + to_string(k) +
                            " violates a structural property (degree " +
                            std::to_string(r.report.degree_ok) + ", nonvanishing " +
                            std::to_string(r.report.nonvanishing_ok) + ", squarefree " +
                            std::to_string(r.report.squarefree_ok) + ", symmetric " +
                            std::to_string(r.report.symmetric_ok) + ")");
  return r;
}

GaussianPoly metabelian_slice(const RileyPolynomial& r) {
  // i^e cycles through 1, i, -1, -i.
  std::vector<BigInt> re, im;
  for (const auto& c : r.phi.coeffs()) {
    BigInt a = 0, b = 0;
    for (const auto& [e, v] : c.terms()) {
      switch (((e % 4) + 4) % 4) {
        case 0: a += v; break;
        case 1: b += v; break;
        case 2: a -= v; break;
        default: b -= v; break;
      }
    }
    re.push_back(a);
    im.push_back(b);
  }
  return {IntPoly(std::move(re)), IntPoly(std::move(im))};
}

bool metabelian_roots_distinct(const GaussianPoly& g) {
  if (!g.im.is_zero() || g.re.degree() < 1) return false;
  return discriminant_nonzero(g.re);
}

}  // namespace ordercert
