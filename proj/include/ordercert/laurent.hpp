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

#ifndef ORDERCERT_LAURENT_HPP
#define ORDERCERT_LAURENT_HPP

#include <map>
#include <utility>
#include <vector>

#include "ordercert/poly.hpp"

namespace ordercert {

/// Integer Laurent polynomial in one variable (m throughout this library).
///
/// Stored densely as a coefficient run starting at exponent low(); both ends
/// of the run are nonzero, and the zero polynomial has an empty run.
class IntLaurent {
 public:
  IntLaurent() = default;
  IntLaurent(long c) : IntLaurent(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  IntLaurent(const BigInt& c) {                   // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  static IntLaurent monomial(const BigInt& c, int exponent);
  static IntLaurent from_terms(const std::map<int, BigInt>& terms);

  bool is_zero() const { return c_.empty(); }
  /// Lowest / highest exponent with a nonzero coefficient. Undefined for zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int exponent) const;
  /// Nonzero terms, ascending exponent.
  std::vector<std::pair<int, BigInt>> terms() const;

  /// Substitute m -> 1/m.
  IntLaurent mirror() const;
  /// Multiply by m^k.
  IntLaurent shifted(int k) const;
  void shift_in_place(int k) {
    if (!c_.empty()) low_ += k;
  }
  bool is_symmetric() const;
  /// Value at m = 1.
  BigInt sum_of_coeffs() const;
  bool is_constant(long c) const;

  IntLaurent& operator+=(const IntLaurent& o);
  IntLaurent& operator-=(const IntLaurent& o);
  IntLaurent& operator*=(const IntLaurent& o) { return *this = *this * o; }
  IntLaurent& operator*=(const BigInt& k);
  IntLaurent operator-() const;

  friend IntLaurent operator+(IntLaurent a, const IntLaurent& b) { return a += b; }
  friend IntLaurent operator-(IntLaurent a, const IntLaurent& b) { return a -= b; }
  friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);
  friend bool operator==(const IntLaurent& a, const IntLaurent& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.low_ == b.low_);
  }

  /// this += a * b without materialising the product.
  void add_product(const IntLaurent& a, const IntLaurent& b);

  template <class T>
  T evaluate(const T& m) const {
    if (c_.empty()) return T(0);
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + T(*it);
    T scale(1);
    const T step = low_ >= 0 ? m : T(1) / m;
    for (int i = 0; i < (low_ >= 0 ? low_ : -low_); ++i) scale *= step;
    return acc * scale;
  }

 private:
  int low_ = 0;
  std::vector<BigInt> c_;

  void trim();
};

inline bool is_zero(const IntLaurent& x) { return x.is_zero(); }

inline void add_product(IntLaurent& acc, const IntLaurent& a, const IntLaurent& b) {
  acc.add_product(a, b);
}

}  // namespace ordercert

#endif
