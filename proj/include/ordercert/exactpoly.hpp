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

#ifndef ORDERCERT_EXACTPOLY_HPP
#define ORDERCERT_EXACTPOLY_HPP

#include <string>
#include <string_view>

#include "ordercert/laurent.hpp"
#include "ordercert/poly.hpp"
#include "ordercert/subresultant.hpp"

namespace ordercert {

/// Polynomial in s with coefficients in Z[m, 1/m].
using BivarPoly = Poly<IntLaurent>;
/// Polynomial in s with coefficients in Z[u], u standing for m + 1/m.
using CosPoly = Poly<IntPoly>;

inline int s_degree(const BivarPoly& p) { return p.degree(); }

/// The polynomial "s" (or "u", "t": any univariate generator).
BivarPoly s_variable();
BivarPoly constant(const IntLaurent& c);

/// Apply m -> 1/m to every coefficient.
BivarPoly mirror(const BivarPoly& p);
bool is_symmetric(const BivarPoly& p);

/// Value of the s^0 coefficient at m = 1, i.e. p(1, 0).
BigInt value_at_one_zero(const BivarPoly& p);

/// m^k + m^-k as a polynomial in u = m + 1/m (k >= 0; k = 0 gives 2).
IntPoly power_sum_in_u(int k);

/// Symmetric Laurent polynomial -> polynomial in u. Throws NotSymmetric.
IntPoly laurent_to_u(const IntLaurent& c);
IntLaurent u_to_laurent(const IntPoly& f);

CosPoly to_cos_form(const BivarPoly& p);
BivarPoly from_cos_form(const CosPoly& f);

/// Discriminant with respect to s, computed exactly over Z[u].
IntPoly discriminant_in_s(const CosPoly& f);

/// True iff discriminant_in_s(f) is not the zero polynomial.
///
/// A nonzero value of disc(f(u0, s)) modulo a prime (with lc(f)(u0) a unit
/// there) certifies a nonzero discriminant, since discriminants commute with
/// such specialisations. Only when no certificate turns up is the full
/// discriminant over Z[u] computed.
bool squarefree_in_s(const CosPoly& f);

/// disc(f) != 0 for a univariate integer polynomial of degree >= 1.
bool discriminant_nonzero(const IntPoly& f);

// Canonical text forms.
//
// Laurent coefficients list m^k before m^-k, in order of decreasing |k|, with
// the constant last ("2*m^2 + 2*m^-2 - 3"). Polynomials in s are written by
// decreasing s-power; a multi-term coefficient is parenthesised, except for the
// s^0 coefficient which is written out flat.
std::string to_string(const IntLaurent& p, std::string_view var = "m");
std::string to_string(const IntPoly& p, std::string_view var);
std::string to_string(const BivarPoly& p);
std::string to_string(const CosPoly& p);

}  // namespace ordercert

#endif
