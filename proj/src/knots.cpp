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

#include "ordercert/knots.hpp"

#include <charconv>
#include <numeric>

#include "ordercert/errors.hpp"
#include "ordercert/exactpoly.hpp"

namespace ordercert {

TwoBridgeKnot normalize(int p, int q) {
  if (p < 3 || p % 2 == 0)
    throw InvalidPair("p must be odd and at least 3 (got " + std::to_string(p) + ")");
  if (q <= 0 || q >= p)
    throw InvalidPair("q must satisfy 0 < q < p (got " + std::to_string(q) + ")");
  if (std::gcd(p, q) != 1)
    throw InvalidPair("p and q must be coprime (got " + std::to_string(p) + "/" +
                      std::to_string(q) + ")");
  TwoBridgeKnot k;
  k.p = p;
  k.q = q % 2 == 0 ? p - q : q;
  k.input_p = p;
  k.input_q = q;
  return k;
}

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InvalidPair("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

TwoBridgeKnot parse_knot(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw InvalidPair("expected a knot as p/q, got '" + std::string(text) + "'");
  return normalize(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::vector<TwoBridgeKnot> enumerate_knots(int p_max) {
  std::vector<TwoBridgeKnot> out;
  for (int p = 3; p <= p_max; p += 2)
    for (int q = 1; q < p; q += 2)
      if (std::gcd(p, q) == 1) out.push_back(normalize(p, q));
  return out;
}

std::string to_string(const TwoBridgeKnot& k) {
  return std::to_string(k.p) + "/" + std::to_string(k.q);
}

SignSequence sign_sequence(const TwoBridgeKnot& k) {
  SignSequence eps;
  eps.reserve(static_cast<std::size_t>(k.p - 1));
  for (long i = 1; i < k.p; ++i) eps.push_back(((i * k.q) / k.p) % 2 == 0 ? 1 : -1);
  return eps;
}

KnotWord relator_word(const TwoBridgeKnot& k) {
  const SignSequence eps = sign_sequence(k);
  KnotWord w;
  w.reserve(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i)
    w.push_back({i % 2 == 0 ? Generator::x : Generator::y, eps[i]});
  return w;
}

std::string to_string(const KnotWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen == Generator::x ? 'x' : 'y';
    if (l.exponent == -1) out += "^-1";
  }
  return out;
}

AlexPoly fox_derivative_x(const TwoBridgeKnot& k) {
  // R = w x w^-1 y^-1 with x, y -> t.
  KnotWord r = relator_word(k);
  const KnotWord w = r;
  r.push_back({Generator::x, 1});
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exponent});
  r.push_back({Generator::y, -1});

  IntLaurent d;
  int prefix = 0;
  for (const auto& l : r) {
    if (l.gen == Generator::x) {
      if (l.exponent == 1)
        d += IntLaurent::monomial(1, prefix);
      else
        d -= IntLaurent::monomial(1, prefix - 1);
    }
    prefix += l.exponent;
  }
  if (d.is_zero()) return {};
  std::vector<BigInt> c;
  for (int e = d.low(); e <= d.high(); ++e) c.push_back(d.coeff(e));
  return AlexPoly(std::move(c));
}

AlexPoly alexander(const TwoBridgeKnot& k) {
  AlexPoly d = fox_derivative_x(k);
  return d.lead() < 0 ? -d : d;
}

namespace {

// Keep A / c with gcd(content(A), c) = 1 and c > 0.
void reduce_fraction(IntPoly& a, BigInt& c, const IntPoly& modulus) {
  if (a.degree() >= modulus.degree()) {
    const int e = a.degree() - modulus.degree() + 1;
    a = pseudo_remainder(a, modulus);
    c *= ring_pow(modulus.lead(), e);
  }
  BigInt g = gcd(content(a), c);
  if (a.is_zero()) g = c;
  if (g != 1 && g != 0) {
    a = exact_div_scalar(a, g);
    c = exact_div(c, g);
  }
  if (c < 0) {
    a = -a;
    c = -c;
  }
}

}  // namespace

bool betti_positive(const AlexPoly& delta, int n) {
  if (n < 1) throw InvalidInput("cover degree must be at least 1");
  if (delta.degree() < 1) return false;
  // t^n = A / c modulo delta over Q, by square and multiply.
  IntPoly a(BigInt(1));
  BigInt c = 1;
  for (int bit = 30; bit >= 0; --bit) {
    a = a * a;
    c *= c;
    reduce_fraction(a, c, delta);
    if ((n >> bit) & 1) {
      a = a.shifted(1);
      reduce_fraction(a, c, delta);
    }
  }
  const IntPoly rem = a - IntPoly(c);
  return gcd_over_q(delta, rem).degree() >= 1;
}

bool betti_positive(const TwoBridgeKnot& k, int n) { return betti_positive(alexander(k), n); }

}  // namespace ordercert
