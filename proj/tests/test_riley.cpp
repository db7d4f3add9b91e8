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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <tuple>

#include "ordercert/riley.hpp"

using namespace ordercert;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

BivarPoly term(long c, int m_power, int s_power = 0) {
  return BivarPoly::monomial(IntLaurent::monomial(c, m_power), s_power);
}

BivarPoly from_terms(const std::vector<std::tuple<int, int, long>>& terms) {
  BivarPoly out;
  for (const auto& [me, se, c] : terms) out += term(c, me, se);
  return out;
}

}  // namespace

TEST_CASE("generator images") {
  const auto& g = generator_images();
  const BivarPoly one = term(1, 0);
  CHECK(g.x.det() == one);
  CHECK(g.y.det() == one);
  CHECK(g.x * g.x_inv == SymMat2::identity());
  CHECK(g.y * g.y_inv == SymMat2::identity());

  const SymMat2 xy = g.x * g.y;
  CHECK(xy.a11 == term(1, 2) + term(1, 0, 1));
  CHECK(xy.a12 == term(1, -1));
  CHECK(xy.a21 == term(1, -1, 1));
  CHECK(xy.a22 == term(1, -2));

  const SymMat2 xyi = g.x * g.y_inv;
  CHECK(xyi.a11 == term(1, 0) - term(1, 0, 1));
  CHECK(xyi.a12 == term(1, 1));
  CHECK(xyi.a21 == term(-1, -1, 1));
  CHECK(xyi.a22 == term(1, 0));
}

TEST_CASE("holonomy of the trefoil word") {
  const SymMat2 w = holonomy_word(normalize(3, 1));
  CHECK(w == generator_images().x * generator_images().y);
}

TEST_CASE("sparse right multiplication matches the generic product") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coin(0, 3);
  const auto& g = generator_images();
  for (int trial = 0; trial < 20; ++trial) {
    KnotWord w;
    SymMat2 generic = SymMat2::identity();
    for (int i = 0; i < 12; ++i) {
      const int c = coin(rng);
      const Letter l{c < 2 ? Generator::x : Generator::y, c % 2 == 0 ? 1 : -1};
      w.push_back(l);
      generic = generic * g.of(l);
    }
    CHECK(holonomy_word(w) == generic);
  }
}

TEST_CASE("s-degree of a product of k degree-one factors is k") {
  KnotWord w;
  for (int k = 1; k <= 8; ++k) {
    w.push_back({Generator::x, 1});
    w.push_back({Generator::y, k % 3 == 0 ? -1 : 1});
    CHECK(holonomy_word(w).a11.degree() == k);
  }
}

TEST_CASE("holonomy determinant is one") {
  for (const auto& k : enumerate_knots(25)) CHECK(holonomy_word(k).det() == term(1, 0));
}

TEST_CASE("riley polynomials of small knots") {
  const auto knot52 = riley_polynomial(normalize(7, 4));
  CHECK(to_string(knot52.phi) ==
        "s^3 + (2*m^2 + 2*m^-2 - 3)*s^2 + (m^4 + m^-4 - 3*m^2 - 3*m^-2 + 6)*s + "
        "2*m^2 + 2*m^-2 - 3");
  CHECK_FALSE(knot52.sign_flipped);
  CHECK(to_string(knot52.cos_form) == "s^3 + (2*u^2 - 7)*s^2 + (u^4 - 7*u^2 + 14)*s + 2*u^2 - 7");
  CHECK(to_string(riley_polynomial(normalize(3, 1)).phi) == "s + m^2 + m^-2 - 1");
  CHECK(to_string(riley_polynomial(normalize(5, 3)).phi) ==
        "s^2 + (m^2 + m^-2 - 3)*s - m^2 - m^-2 + 3");
}

TEST_CASE("riley polynomials frozen from an independent symbolic product") {
  // (m exponent, s exponent, coefficient)
  CHECK(riley_polynomial(normalize(5, 1)).phi ==
        from_terms({{-4, 0, 1}, {-2, 0, -1}, {-2, 1, 2}, {0, 0, 1}, {0, 1, -1}, {0, 2, 1},
                    {2, 0, -1}, {2, 1, 2}, {4, 0, 1}}));
  CHECK(riley_polynomial(normalize(9, 5)).phi ==
        from_terms({{-4, 1, -1}, {-4, 2, 1}, {-2, 0, -2}, {-2, 1, 7}, {-2, 2, -6}, {-2, 3, 2},
                    {0, 0, 5},   {0, 1, -14}, {0, 2, 13}, {0, 3, -5}, {0, 4, 1},  {2, 0, -2},
                    {2, 1, 7},   {2, 2, -6},  {2, 3, 2},  {4, 1, -1}, {4, 2, 1}}));
  CHECK(riley_polynomial(normalize(11, 3)).phi ==
        from_terms({{-8, 1, 1},  {-6, 1, -3}, {-6, 2, 4},  {-4, 0, -1}, {-4, 1, 6},  {-4, 2, -9},
                    {-4, 3, 6},  {-2, 0, 3},  {-2, 1, -11}, {-2, 2, 16}, {-2, 3, -9}, {-2, 4, 4},
                    {0, 0, -3},  {0, 1, 13},  {0, 2, -19}, {0, 3, 14},  {0, 4, -3},  {0, 5, 1},
                    {2, 0, 3},   {2, 1, -11}, {2, 2, 16},  {2, 3, -9},  {2, 4, 4},   {4, 0, -1},
                    {4, 1, 6},   {4, 2, -9},  {4, 3, 6},   {6, 1, -3},  {6, 2, 4},   {8, 1, 1}}));
}

TEST_CASE("metabelian slices") {
  const auto g52 = metabelian_slice(riley_polynomial(normalize(7, 3)));
  CHECK(g52.im.is_zero());
  CHECK(g52.re == ip({-7, 14, -7, 1}));
  CHECK(metabelian_roots_distinct(g52));
  const auto g31 = metabelian_slice(riley_polynomial(normalize(3, 1)));
  CHECK(g31.re == ip({-3, 1}));
  CHECK(g31.im.is_zero());
  CHECK(metabelian_slice(riley_polynomial(normalize(5, 3))).re == ip({5, -5, 1}));
  CHECK(metabelian_slice(riley_polynomial(normalize(9, 5))).re == ip({9, -30, 27, -9, 1}));
}

TEST_CASE("structural properties for p <= 41") {
  for (const auto& k : enumerate_knots(41)) {
    CAPTURE(to_string(k));
    const RileyPolynomial r = riley_polynomial_unchecked(k);
    CHECK(r.report.degree_ok);
    CHECK(s_degree(r.phi) == (k.p - 1) / 2);
    CHECK(r.phi.lead().is_constant(1));
    CHECK(r.report.nonvanishing_ok);
    CHECK(r.report.symmetric_ok);
    CHECK(r.report.squarefree_ok);
    CHECK(from_cos_form(r.cos_form) == r.phi);
    CHECK(metabelian_roots_distinct(metabelian_slice(r)));
  }
}

TEST_CASE("phi(1, 0) values") {
  CHECK(value_at_one_zero(riley_polynomial(normalize(3, 1)).phi) == 1);
  CHECK(value_at_one_zero(riley_polynomial(normalize(5, 3)).phi) == 1);
  CHECK(value_at_one_zero(riley_polynomial(normalize(7, 3)).phi) == 1);
  CHECK(value_at_one_zero(riley_polynomial(normalize(9, 5)).phi) == 1);
}
