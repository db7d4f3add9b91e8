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

#ifndef ORDERCERT_KNOTS_HPP
#define ORDERCERT_KNOTS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ordercert/poly.hpp"

namespace ordercert {

/// A (p, q) two-bridge knot in Schubert normal form: p odd >= 3,
/// 0 < q < p, gcd(p, q) = 1 and q odd. An even input q is replaced by p - q
/// (the mirror image); the pair as given is kept in input_p / input_q.
struct TwoBridgeKnot {
  int p = 3;
  int q = 1;
  int input_p = 3;
  int input_q = 1;

  bool mirrored() const { return q != input_q; }
  friend bool operator==(const TwoBridgeKnot& a, const TwoBridgeKnot& b) {
    return a.p == b.p && a.q == b.q;
  }
};

/// Throws InvalidPair unless p is odd, p >= 3, 0 < q < p and gcd(p, q) = 1.
TwoBridgeKnot normalize(int p, int q);
/// Accepts "p/q".
TwoBridgeKnot parse_knot(std::string_view text);
/// Every normalized knot with p <= p_max, ordered by (p, q).
std::vector<TwoBridgeKnot> enumerate_knots(int p_max);

/// "p/q" for the normalized pair.
std::string to_string(const TwoBridgeKnot& k);

/// eps_1 .. eps_{p-1}, each +1 or -1.
using SignSequence = std::vector<int>;

enum class Generator { x, y };

struct Letter {
  Generator gen;
  int exponent;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// x^eps_1 y^eps_2 x^eps_3 ... y^eps_{p-1}.
using KnotWord = std::vector<Letter>;

/// eps_i = (-1)^floor(i q / p).
SignSequence sign_sequence(const TwoBridgeKnot& k);
KnotWord relator_word(const TwoBridgeKnot& k);
/// "x y x^-1 y^-1 x y"
std::string to_string(const KnotWord& w);

/// Alexander polynomial in t, shifted to start at t^0 and signed so the
/// leading coefficient is positive.
using AlexPoly = IntPoly;

AlexPoly alexander(const TwoBridgeKnot& k);
/// Abelianised Fox derivative d(w x w^-1 y^-1)/dx, before any normalisation,
/// shifted to start at t^0.
AlexPoly fox_derivative_x(const TwoBridgeKnot& k);

/// True iff gcd(delta, t^n - 1) over Q is non-constant, i.e. the n-fold
/// cyclic branched cover has positive first Betti number.
bool betti_positive(const AlexPoly& delta, int n);
bool betti_positive(const TwoBridgeKnot& k, int n);

}  // namespace ordercert

#endif
