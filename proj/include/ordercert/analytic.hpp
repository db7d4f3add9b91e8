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

#ifndef ORDERCERT_ANALYTIC_HPP
#define ORDERCERT_ANALYTIC_HPP

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <Eigen/Dense>

#include "ordercert/errors.hpp"
#include "ordercert/exactpoly.hpp"
#include "ordercert/knots.hpp"
#include "ordercert/riley.hpp"

namespace ordercert {

namespace bmp = boost::multiprecision;

/// 50 significant decimal digits; used to build and verify certificates.
using HighReal = bmp::number<bmp::mpfr_float_backend<50>, bmp::et_off>;
using HighComplex = bmp::number<bmp::complex_adaptor<bmp::mpfr_float_backend<50>>, bmp::et_off>;

template <class Real>
struct complex_of {
  using type = std::complex<Real>;
};
template <>
struct complex_of<HighReal> {
  using type = HighComplex;
};
template <class Real>
using ComplexT = typename complex_of<Real>::type;

template <class Real>
using CMatrix2 = Eigen::Matrix<ComplexT<Real>, 2, 2>;
template <class Real>
using RMatrix2 = Eigen::Matrix<Real, 2, 2>;

/// Strict margin for the open conditions s < 0 and s > 4 sin^2(theta).
inline constexpr double kStrictTolerance = 1e-9;
/// Default bound on certificate residuals.
inline constexpr double kCertificateTolerance = 1e-9;
/// Slice coefficients are rounded to multiples of 2^-50 (< 1e-15) before
/// the exact Sturm computation.
inline constexpr int kSliceScaleBits = 50;
/// Default relative width of refined isolating intervals.
inline constexpr double kRootWidth = 1e-12;

// ---------------------------------------------------------------------------
// Real slice phi(e^{i theta}, s)

template <class Real>
struct RealSlice {
  Real theta;
  std::vector<Real> coeffs;  // coefficient of s^i at index i

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  Real operator()(const Real& s) const {
    Real acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
    return acc;
  }
};

/// Evaluate every Z[u] coefficient at u = 2 cos(theta). Since
/// m + 1/m = 2 cos(theta) on the unit circle the result is real by
/// construction.
template <class Real>
RealSlice<Real> real_slice(const CosPoly& f, const Real& theta) {
  using std::cos;
  const Real pi = boost::math::constants::pi<Real>();
  if (!(theta > 0 && theta < pi)) throw InvalidInput("real_slice: theta must lie in (0, pi)");
  const Real u = 2 * cos(theta);
  RealSlice<Real> out{theta, {}};
  out.coeffs.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.coeffs.push_back(c.evaluate(u));
  return out;
}

// ---------------------------------------------------------------------------
// Root isolation

struct RealRoot {
  double value = 0;
  BigRational lo, hi;  // lo <= root <= hi
  double refinement_width = 0;
};

/// Sturm sequence p, p', -rem, ... with positive rescaling and content
/// removal; the sign structure matches the classical sequence.
std::vector<IntPoly> sturm_sequence(const IntPoly& p);
/// Number of distinct real roots.
int count_real_roots(const IntPoly& p);
/// Number of distinct roots in (a, b]; a and b must not be roots.
int count_roots_between(const std::vector<IntPoly>& sturm, const BigRational& a, const BigRational& b);

/// All distinct real roots of an integer polynomial, ascending, each in an
/// isolating interval refined to width <= rel_width * max(1, |root|).
std::vector<RealRoot> isolate_real_roots(const IntPoly& p, double rel_width = kRootWidth);

/// round(c * 2^bits) for every coefficient.
template <class Real>
IntPoly rational_approximation(const RealSlice<Real>& slice, int bits = kSliceScaleBits) {
  using std::ldexp;
  using std::round;
  std::vector<BigInt> c;
  c.reserve(slice.coeffs.size());
  for (const auto& x : slice.coeffs) c.push_back(static_cast<BigInt>(round(ldexp(x, bits))));
  return IntPoly(std::move(c));
}

/// Throws DegenerateLeading when |leading coefficient| < 1e-12.
template <class Real>
std::vector<RealRoot> isolate_real_roots(const RealSlice<Real>& slice, double rel_width = kRootWidth) {
  using std::abs;
  if (slice.coeffs.empty() || abs(slice.coeffs.back()) < Real(1e-12))
    throw DegenerateLeading("slice leading coefficient vanishes; treat as lower degree");
  return isolate_real_roots(rational_approximation(slice), rel_width);
}

template <class Real>
Real to_real(const BigRational& q) {
  return Real(numerator(q)) / Real(denominator(q));
}

/// Bisect the isolating interval of r against the slice itself until it is
/// narrower than `width`. Returns the midpoint of the final interval.
template <class Real>
Real polish_root(const RealSlice<Real>& slice, const RealRoot& r, const Real& width) {
  Real lo = to_real<Real>(r.lo), hi = to_real<Real>(r.hi);
  Real flo = slice(lo), fhi = slice(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  // The interval came from a rounded polynomial; widen it until the exact
  // slice changes sign, or give up on an even-multiplicity root.
  for (int grow = 0; grow < 24 && (flo < 0) == (fhi < 0); ++grow) {
    const Real w = hi - lo;
    lo -= w;
    hi += w;
    flo = slice(lo);
    fhi = slice(hi);
  }
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) return to_real<Real>((r.lo + r.hi) / 2);
  for (int it = 0; it < 400 && hi - lo > width; ++it) {
    Real mid = (lo + hi) / 2;
    Real fm = slice(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

// ---------------------------------------------------------------------------
// SL(2, R) test and representations

enum class Sl2rBranch { negative, above_four_sin_sq, fails, boundary };

std::string to_string(Sl2rBranch b);

/// Classify s against 0 and 4 sin^2(theta); within tol of either threshold
/// is reported as boundary.
Sl2rBranch sl2r_condition(double s, double theta, double tol = kStrictTolerance);

template <class Real>
struct Representation {
  CMatrix2<Real> x, y;
};

/// Diagonalised images at m = e^{i theta}:
///   x -> diag(e^{i theta}, e^{-i theta})
///   y -> [[e^{i theta} - i s / (2 sin theta), -1 + s / (4 sin^2 theta)],
///         [s,                               e^{-i theta} + i s / (2 sin theta)]]
template <class Real>
Representation<Real> build_representation(const Real& theta, const Real& s) {
  using C = ComplexT<Real>;
  using std::cos;
  using std::sin;
  const Real sn = sin(theta);
  const Real cs = cos(theta);
  const Real a = s / (2 * sn);
  Representation<Real> rho;
  rho.x << C(cs, sn), C(0), C(0), C(cs, -sn);
  rho.y << C(cs, sn - a), C(Real(-1) + s / (4 * sn * sn)), C(s), C(cs, -sn + a);
  return rho;
}

/// theta = pi / n.
template <class Real>
Representation<Real> build_representation(int n, const Real& s) {
  return build_representation(Real(boost::math::constants::pi<Real>() / n), s);
}

template <class M>
M inverse2(const M& a) {
  using S = typename M::Scalar;
  const S det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  M r;
  r << a(1, 1) / det, -a(0, 1) / det, -a(1, 0) / det, a(0, 0) / det;
  return r;
}

/// Product of the images along a word, left to right.
template <class M>
M evaluate_word(const KnotWord& w, const M& x, const M& y) {
  const M xi = inverse2(x);
  const M yi = inverse2(y);
  M acc = M::Identity();
  for (const auto& l : w) {
    if (l.gen == Generator::x)
      acc = (acc * (l.exponent > 0 ? x : xi)).eval();
    else
      acc = (acc * (l.exponent > 0 ? y : yi)).eval();
  }
  return acc;
}

/// Largest entry modulus.
template <class M>
auto max_abs(const M& m) {
  using std::abs;
  auto best = abs(m(0, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto v = abs(m(i, j));
      if (v > best) best = v;
    }
  return best;
}

/// || rho(w) rho(x) - rho(y) rho(w) ||_max for the relator of the knot.
template <class M>
auto relation_residual(const KnotWord& w, const M& x, const M& y) {
  const M rw = evaluate_word(w, x, y);
  return max_abs((rw * x - y * rw).eval());
}

template <class M>
M matrix_power(M base, int n) {
  M r = M::Identity();
  while (n > 0) {
    if (n & 1) r = (r * base).eval();
    n >>= 1;
    if (n > 0) base = (base * base).eval();
  }
  return r;
}

template <class Real>
struct RealRepresentation {
  RMatrix2<Real> x, y;
  Real max_imag;  // largest imaginary part discarded when coercing to real
  Real t;
};

/// Conjugate into SU(1,1) by
///   [[sqrt(1/sqrt(t) + t), t], [sqrt(t), sqrt(sqrt(t) + t^2)]],
///   t = 1 / (4 sin^2 theta) - 1 / s,
/// as A -> C A C^-1, then into SL(2, R) by the Cayley matrix
/// M = [[1, -i], [1, i]] as B -> M^-1 B M. Throws NonPositiveT when t <= 0.
template <class Real>
RealRepresentation<Real> conjugate_to_real(const Representation<Real>& rho, const Real& theta,
                                           const Real& s) {
  using C = ComplexT<Real>;
  using std::abs;
  using std::imag;
  using std::real;
  using std::sin;
  using std::sqrt;
  const Real sn = sin(theta);
  const Real t = Real(1) / (4 * sn * sn) - Real(1) / s;
  if (!(t > 0)) throw NonPositiveT("conjugate_to_real: t = 1/(4 sin^2) - 1/s is not positive");
  const Real rt = sqrt(t);
  CMatrix2<Real> c;
  c << C(sqrt(Real(1) / rt + t)), C(t), C(rt), C(sqrt(rt + t * t));
  CMatrix2<Real> cayley;
  cayley << C(1), C(0, -1), C(1), C(0, 1);
  const CMatrix2<Real> ci = inverse2(c);
  const CMatrix2<Real> cayley_inv = inverse2(cayley);

  RealRepresentation<Real> out;
  out.t = t;
  out.max_imag = Real(0);
  auto to_real_matrix = [&](const CMatrix2<Real>& a) {
    const CMatrix2<Real> b = (cayley_inv * (c * a * ci).eval() * cayley).eval();
    RMatrix2<Real> r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        r(i, j) = real(b(i, j));
        const Real im = abs(imag(b(i, j)));
        if (im > out.max_imag) out.max_imag = im;
      }
    return r;
  };
  out.x = to_real_matrix(rho.x);
  out.y = to_real_matrix(rho.y);
  return out;
}

// ---------------------------------------------------------------------------
// Certification

struct RepCertificate {
  int n = 0;
  double theta = 0;
  RealRoot s_star;
  Sl2rBranch branch = Sl2rBranch::fails;
  double margin = 0;  // distance from s_star to the nearer threshold
  Eigen::Matrix2cd rho_x, rho_y;
  Eigen::Matrix2d real_x, real_y;
  double t = 0;
  double residual_relation = 0;       // ||rho(w)rho(x) - rho(y)rho(w)||_max
  double residual_central = 0;        // ||rho(x)^n + I||_max
  double residual_relation_real = 0;  // same relation after conjugation
  double max_imag = 0;                // realness of the conjugated pair
  double det_error = 0;               // max |det - 1| of the conjugated pair

  bool valid(double tol = kCertificateTolerance) const;
};

struct CertifiedLeftOrderable {
  RepCertificate certificate;
};
struct CertifiedViaBetti {};

enum class InconclusiveReason { no_real_root, all_roots_fail, boundary_root, certificate_rejected };

struct Inconclusive {
  InconclusiveReason reason;
};

using Verdict = std::variant<CertifiedLeftOrderable, CertifiedViaBetti, Inconclusive>;

bool is_certified(const Verdict& v);
std::string verdict_name(const Verdict& v);
std::string to_string(InconclusiveReason r);

struct CertifyOptions {
  double tolerance = kCertificateTolerance;
  double strict_tolerance = kStrictTolerance;
};

/// Everything about a knot that does not depend on n.
struct KnotAnalysis {
  TwoBridgeKnot knot;
  KnotWord word;
  AlexPoly alexander;
  RileyPolynomial riley;

  static KnotAnalysis of(const TwoBridgeKnot& k);
};

/// Build a certificate at the given (already polished) root and validate it
/// in high precision.
RepCertificate make_certificate(const KnotWord& w, int n, const HighReal& s, const RealRoot& root,
                                Sl2rBranch branch, double margin);

/// Positive Betti number first; otherwise slice at theta = pi/n, isolate all
/// real roots, and certify with the qualifying root of largest margin.
Verdict certify(const KnotAnalysis& a, int n, const CertifyOptions& opts = {});
Verdict certify(const TwoBridgeKnot& k, int n, const CertifyOptions& opts = {});

struct OrderabilityReport {
  TwoBridgeKnot knot;
  int n_max = 0;
  std::vector<std::pair<int, Verdict>> verdicts;  // n = 2 .. n_max
  /// Least N such that every n in [N, n_max] is certified.
  std::optional<int> threshold;
};

OrderabilityReport scan(const KnotAnalysis& a, int n_max, const CertifyOptions& opts = {});
OrderabilityReport scan(const TwoBridgeKnot& k, int n_max, const CertifyOptions& opts = {});

struct CurveSample {
  double theta;
  std::vector<double> roots;
};

/// Real roots of phi(e^{i theta}, s) at evenly spaced theta in [from, to].
std::vector<CurveSample> sample_curve(const CosPoly& f, double from, double to, int steps);

}  // namespace ordercert

#endif
