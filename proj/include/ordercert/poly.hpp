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

#ifndef ORDERCERT_POLY_HPP
#define ORDERCERT_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace ordercert {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

// Coefficient-ring hooks. Every ring R used as Poly<R>::Scalar provides
// is_zero(R); rings that take part in subresultant computations also provide
// exact_div(R, R).

inline bool is_zero(const BigInt& x) { return x.is_zero(); }

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

/// acc += a * b, specialised where an in-place form is cheaper.
template <class R>
inline void add_product(R& acc, const R& a, const R& b) {
  acc += a * b;
}

inline void add_product(BigInt& acc, const BigInt& a, const BigInt& b) {
  mpz_addmul(acc.backend().data(), a.backend().data(), b.backend().data());
}

namespace detail {
// Unqualified call so later overloads are found by ADL at instantiation.
template <class R>
bool coeff_is_zero(const R& x) {
  return is_zero(x);
}
}  // namespace detail

template <class R>
R ring_pow(R base, int e) {
  R result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

/// Dense univariate polynomial over a commutative ring R. Index i holds the
/// coefficient of X^i; the leading coefficient is never zero.
template <class R>
class Poly {
 public:
  using Scalar = R;

  Poly() = default;
  explicit Poly(const R& c) {
    if (!detail::coeff_is_zero(c)) c_.push_back(c);
  }
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const R& c, int k) {
    if (detail::coeff_is_zero(c)) return {};
    std::vector<R> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    Poly p;
    p.c_ = std::move(v);
    return p;
  }
  static Poly variable() { return monomial(R(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const {
    return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1;
  }
  const std::vector<R>& coeffs() const { return c_; }

  const R& coeff(int i) const {
    static const R zero{};
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
  }
  const R& operator[](int i) const { return coeff(i); }
  const R& lead() const { return c_.back(); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        add_product(out[i + j], a.c_[i], b.c_[j]);
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scaled(const R& k) const {
    std::vector<R> out = c_;
    for (auto& c : out) c *= k;
    return Poly(std::move(out));
  }

  /// Multiply by X^k.
  Poly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<R> out(static_cast<std::size_t>(k) + c_.size());
    std::copy(c_.begin(), c_.end(), out.begin() + k);
    Poly p;
    p.c_ = std::move(out);
    return p;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      out[i - 1] = c_[i] * R(static_cast<long>(i));
    return Poly(std::move(out));
  }

  /// Horner evaluation; T must be constructible from R.
  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  /// Apply f to every coefficient in place.
  template <class F>
  void transform(F&& f) {
    for (auto& c : c_) f(c);
    trim();
  }

  /// Coefficientwise map into another ring.
  template <class S, class F>
  Poly<S> map(F&& f) const {
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Poly<S>(std::move(out));
  }

 private:
  std::vector<R> c_;

  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

/// lc(b)^(deg a - deg b + 1) * a reduced modulo b.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<R> r = a.coeffs();
  const R& lb = b.lead();
  for (int top = a.degree(); top >= db; --top) {
    R q = r[static_cast<std::size_t>(top)];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(top - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return Poly<R>(std::move(r));
}

/// Quotient of a by b when b divides a exactly over R; throws otherwise.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: zero divisor");
  if (a.is_zero()) return {};
  const int db = b.degree();
  if (a.degree() < db) throw std::domain_error("exact_div: not divisible");
  std::vector<R> r = a.coeffs();
  std::vector<R> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int top = a.degree(); top >= db; --top) {
    const R& rt = r[static_cast<std::size_t>(top)];
    if (is_zero(rt)) continue;
    R c = exact_div(rt, b.lead());
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(top - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(top - db)] = std::move(c);
  }
  for (const auto& c : r)
    if (!is_zero(c)) throw std::domain_error("exact_div: not divisible");
  return Poly<R>(std::move(q));
}

/// Divide every coefficient by the scalar k (exactly).
template <class R>
Poly<R> exact_div_scalar(const Poly<R>& a, const R& k) {
  return a.template map<R>([&](const R& c) { return exact_div(c, k); });
}

using IntPoly = Poly<BigInt>;

/// Positive gcd of the coefficients (0 for the zero polynomial).
BigInt content(const IntPoly& p);
/// p / content(p), with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);
/// Monic-up-to-content gcd over Q, returned primitive with positive lead.
IntPoly gcd_over_q(IntPoly a, IntPoly b);

/// Arithmetic modulo a fixed prime below 2^31.
template <std::uint32_t P>
struct ModInt {
  std::uint32_t v = 0;

  ModInt() = default;
  ModInt(long x) {  // NOLINT(google-explicit-constructor)
    long r = x % static_cast<long>(P);
    v = static_cast<std::uint32_t>(r < 0 ? r + static_cast<long>(P) : r);
  }
  explicit ModInt(const BigInt& x) {
    BigInt r = x % P;
    if (r < 0) r += P;
    v = r.convert_to<std::uint32_t>();
  }

  ModInt& operator+=(ModInt o) {
    v = static_cast<std::uint32_t>((std::uint64_t{v} + o.v) % P);
    return *this;
  }
  ModInt& operator-=(ModInt o) {
    v = static_cast<std::uint32_t>((std::uint64_t{v} + P - o.v) % P);
    return *this;
  }
  ModInt& operator*=(ModInt o) {
    v = static_cast<std::uint32_t>(std::uint64_t{v} * o.v % P);
    return *this;
  }
  ModInt operator-() const { return ModInt() -= *this; }
  friend ModInt operator+(ModInt a, ModInt b) { return a += b; }
  friend ModInt operator-(ModInt a, ModInt b) { return a -= b; }
  friend ModInt operator*(ModInt a, ModInt b) { return a *= b; }
  friend bool operator==(ModInt a, ModInt b) { return a.v == b.v; }

  ModInt inverse() const {
    ModInt r(1), b = *this;
    for (std::uint32_t e = P - 2; e > 0; e >>= 1) {
      if (e & 1) r *= b;
      b *= b;
    }
    return r;
  }
};

template <std::uint32_t P>
bool is_zero(ModInt<P> x) {
  return x.v == 0;
}

template <std::uint32_t P>
ModInt<P> exact_div(ModInt<P> a, ModInt<P> b) {
  return a * b.inverse();
}

}  // namespace ordercert

#endif
