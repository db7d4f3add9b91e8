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

#include "ordercert/exactpoly.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "ordercert/errors.hpp"

namespace ordercert {

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  if (p.lead() < 0) c = -c;
  return exact_div_scalar(p, c);
}

IntPoly gcd_over_q(IntPoly a, IntPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;
}

BivarPoly s_variable() { return BivarPoly::variable(); }

BivarPoly constant(const IntLaurent& c) { return BivarPoly(c); }

BivarPoly mirror(const BivarPoly& p) {
  return p.map<IntLaurent>([](const IntLaurent& c) { return c.mirror(); });
}

bool is_symmetric(const BivarPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const IntLaurent& c) { return c.is_symmetric(); });
}

BigInt value_at_one_zero(const BivarPoly& p) { return p[0].sum_of_coeffs(); }

namespace {

// V_0 = 2, V_1 = u, V_{k+1} = u V_k - V_{k-1}; V_k(m + 1/m) = m^k + m^-k.
std::vector<IntPoly> power_sums(int kmax) {
  std::vector<IntPoly> v;
  v.push_back(IntPoly(BigInt(2)));
  if (kmax >= 1) v.push_back(IntPoly::variable());
  for (int k = 1; k < kmax; ++k) v.push_back(v[k].shifted(1) - v[k - 1]);
  return v;
}

IntPoly laurent_to_u(const IntLaurent& c, const std::vector<IntPoly>& sums) {
  if (!c.is_symmetric()) throw NotSymmetric("coefficient is not invariant under m -> 1/m");
  if (c.is_zero()) return {};
  IntPoly out(c.coeff(0));
  for (int k = 1; k <= c.high(); ++k) {
    BigInt ck = c.coeff(k);
    if (!ck.is_zero()) out += sums[static_cast<std::size_t>(k)].scaled(ck);
  }
  return out;
}

}  // namespace

IntPoly power_sum_in_u(int k) { return power_sums(k)[static_cast<std::size_t>(k)]; }

IntPoly laurent_to_u(const IntLaurent& c) {
  return laurent_to_u(c, power_sums(c.is_zero() ? 0 : std::max(c.high(), 0)));
}

IntLaurent u_to_laurent(const IntPoly& f) {
  const IntLaurent u = IntLaurent::monomial(1, 1) + IntLaurent::monomial(1, -1);
  IntLaurent out, power(1);
  for (int i = 0; i <= f.degree(); ++i) {
    if (!f[i].is_zero()) out.add_product(power, IntLaurent(f[i]));
    power *= u;
  }
  return out;
}

CosPoly to_cos_form(const BivarPoly& p) {
  int kmax = 0;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) kmax = std::max(kmax, c.high());
  const auto sums = power_sums(kmax);
  return p.map<IntPoly>([&](const IntLaurent& c) { return laurent_to_u(c, sums); });
}

BivarPoly from_cos_form(const CosPoly& f) {
  return f.map<IntLaurent>([](const IntPoly& c) { return u_to_laurent(c); });
}

IntPoly discriminant_in_s(const CosPoly& f) { return discriminant(f); }

namespace {

constexpr std::uint32_t kPrime0 = 2147483647u;
constexpr std::uint32_t kPrime1 = 2147483629u;
constexpr std::uint32_t kPrime2 = 2147483587u;

template <std::uint32_t P>
bool disc_nonzero_mod(const std::vector<BigInt>& coeffs) {
  std::vector<ModInt<P>> red;
  red.reserve(coeffs.size());
  for (const auto& c : coeffs) red.emplace_back(c);
  Poly<ModInt<P>> f(std::move(red));
  if (f.degree() != static_cast<int>(coeffs.size()) - 1) return false;
  return !is_zero(discriminant(f));
}

bool disc_certified_nonzero(const std::vector<BigInt>& coeffs) {
  return disc_nonzero_mod<kPrime0>(coeffs) || disc_nonzero_mod<kPrime1>(coeffs) ||
         disc_nonzero_mod<kPrime2>(coeffs);
}

}  // namespace

bool discriminant_nonzero(const IntPoly& f) {
  if (f.degree() < 1) throw std::domain_error("discriminant_nonzero: degree must be at least 1");
  if (f.degree() == 1) return true;
  if (disc_certified_nonzero(f.coeffs())) return true;
  return !is_zero(discriminant(f));
}

bool squarefree_in_s(const CosPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_in_s: zero polynomial");
  if (f.degree() <= 1) return true;
  constexpr std::array<long, 9> kProbes{0, 1, -1, 2, -2, 3, -3, 5, -5};
  for (long u0 : kProbes) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) coeffs.push_back(c.evaluate(BigInt(u0)));
    if (coeffs.back().is_zero()) continue;
    if (disc_certified_nonzero(coeffs)) return true;
  }
  return !discriminant_in_s(f).is_zero();
}

// ---------------------------------------------------------------------------
// Text

namespace {

struct Piece {
  BigInt coeff;       // sign carrier; magnitude printed unless 1 with a monomial
  std::string mono;   // "" for a bare constant
  bool paren = false; // body already complete, sign is always +
  std::string body;
};

std::string power_text(std::string_view var, int k) {
  if (k == 0) return {};
  if (k == 1) return std::string(var);
  return std::string(var) + "^" + std::to_string(k);
}

std::string join_mono(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

std::string render(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& pc : pieces) {
    std::string body;
    bool negative = false;
    if (pc.paren) {
      body = pc.body;
    } else {
      negative = pc.coeff < 0;
      BigInt mag = abs(pc.coeff);
      if (pc.mono.empty())
        body = mag.str();
      else if (mag == 1)
        body = pc.mono;
      else
        body = mag.str() + "*" + pc.mono;
    }
    if (first)
      out += negative ? "-" + body : body;
    else
      out += negative ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

std::vector<Piece> laurent_pieces(const IntLaurent& p, std::string_view var) {
  auto terms = p.terms();
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int aa = std::abs(a.first), bb = std::abs(b.first);
    if (aa != bb) return aa > bb;
    return a.first > b.first;
  });
  std::vector<Piece> out;
  for (auto& [k, c] : terms) out.push_back({c, power_text(var, k), false, {}});
  return out;
}

std::vector<Piece> upoly_pieces(const IntPoly& p, std::string_view var) {
  std::vector<Piece> out;
  for (int k = p.degree(); k >= 0; --k)
    if (!p[k].is_zero()) out.push_back({p[k], power_text(var, k), false, {}});
  return out;
}

template <class C, class PiecesFn>
std::string render_in_s(const Poly<C>& p, PiecesFn pieces_of) {
  std::vector<Piece> out;
  for (int j = p.degree(); j >= 0; --j) {
    if (is_zero(p[j])) continue;
    auto inner = pieces_of(p[j]);
    const std::string smono = power_text("s", j);
    if (j == 0) {
      out.insert(out.end(), inner.begin(), inner.end());
    } else if (inner.size() == 1) {
      out.push_back({inner[0].coeff, join_mono(inner[0].mono, smono), false, {}});
    } else {
      Piece pc;
      pc.paren = true;
      pc.body = "(" + render(inner) + ")*" + smono;
      out.push_back(std::move(pc));
    }
  }
  return render(out);
}

}  // namespace

std::string to_string(const IntLaurent& p, std::string_view var) {
  return render(laurent_pieces(p, var));
}

std::string to_string(const IntPoly& p, std::string_view var) {
  return render(upoly_pieces(p, var));
}

std::string to_string(const BivarPoly& p) {
  return render_in_s(p, [](const IntLaurent& c) { return laurent_pieces(c, "m"); });
}

std::string to_string(const CosPoly& p) {
  return render_in_s(p, [](const IntPoly& c) { return upoly_pieces(c, "u"); });
}

}  // namespace ordercert
