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

#ifndef ORDERCERT_RILEY_HPP
#define ORDERCERT_RILEY_HPP

#include "ordercert/exactpoly.hpp"
#include "ordercert/knots.hpp"

namespace ordercert {

/// 2x2 matrix over Z[m, 1/m][s].
struct SymMat2 {
  BivarPoly a11, a12, a21, a22;

  static SymMat2 identity();
  BivarPoly det() const;

  friend SymMat2 operator*(const SymMat2& a, const SymMat2& b);
  friend bool operator==(const SymMat2&, const SymMat2&) = default;
};

/// Images of the meridians: x -> [[m, 1], [0, 1/m]], y -> [[m, 0], [s, 1/m]],
/// together with their inverses.
struct GeneratorImages {
  SymMat2 x, y, x_inv, y_inv;

  const SymMat2& of(const Letter& l) const;
};

const GeneratorImages& generator_images();

/// a * (image of l), using the sparsity of the generator images.
SymMat2 times_generator(SymMat2 a, const Letter& l);

/// Left-to-right product of the generator images along the word.
SymMat2 holonomy_word(const KnotWord& w);
SymMat2 holonomy_word(const TwoBridgeKnot& k);

struct PropertyReport {
  bool degree_ok = false;       // s-degree (p-1)/2, leading coefficient +-1
  bool nonvanishing_ok = false; // phi(1, 0) != 0
  bool squarefree_ok = false;   // no repeated factors in s
  bool symmetric_ok = false;    // phi(m, s) = phi(1/m, s)

  bool all() const { return degree_ok && nonvanishing_ok && squarefree_ok && symmetric_ok; }
};

struct RileyPolynomial {
  TwoBridgeKnot knot;
  BivarPoly phi;     // leading s-coefficient +1
  CosPoly cos_form;  // phi(m, s) = cos_form(m + 1/m, s); empty if not symmetric
  PropertyReport report;
  bool sign_flipped = false;
};

/// phi = w11 + (1/m - m) w12 for rho(w) = [[w11, w12], [w21, w22]], with
/// every structural property checked; throws PropertyViolation on failure.
RileyPolynomial riley_polynomial(const TwoBridgeKnot& k);
/// Same computation, reporting failures instead of throwing.
RileyPolynomial riley_polynomial_unchecked(const TwoBridgeKnot& k);

/// phi(i, s), split into real and imaginary integer parts.
struct GaussianPoly {
  IntPoly re, im;
};

GaussianPoly metabelian_slice(const RileyPolynomial& r);
/// The slice has real coefficients and (p-1)/2 distinct complex roots.
bool metabelian_roots_distinct(const GaussianPoly& g);

}  // namespace ordercert

#endif
