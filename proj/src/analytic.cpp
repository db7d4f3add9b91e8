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

#include "ordercert/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace ordercert {

// ---------------------------------------------------------------------------
// Sturm sequences

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  if (p.is_zero()) throw InvalidInput("sturm_sequence: zero polynomial");
  std::vector<IntPoly> seq{p};
  if (p.degree() < 1) return seq;
  seq.push_back(p.derivative());
  while (true) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem multiplies by lc(b)^(deg a - deg b + 1); undo its sign.
    const bool flip = b.lead() < 0 && (a.degree() - b.degree() + 1) % 2 == 1;
    if (!flip) r = -r;
    const BigInt c = content(r);
    seq.push_back(exact_div_scalar(r, c));
  }
  return seq;
}

namespace {

// Sign of p(num / den) for den > 0.
int sign_at(const IntPoly& p, const BigInt& num, const BigInt& den) {
  const auto& c = p.coeffs();
  if (c.empty()) return 0;
  BigInt acc = c.back();
  BigInt pw = 1;
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    pw *= den;
    acc *= num;
    add_product(acc, c[static_cast<std::size_t>(i)], pw);
  }
  return acc.sign();
}

int variations(const std::vector<IntPoly>& seq, const BigInt& num, const BigInt& den) {
  int count = 0, last = 0;
  for (const auto& q : seq) {
    const int s = sign_at(q, num, den);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Sign variations at +infinity (dir = 1) or -infinity (dir = -1).
int variations_at_infinity(const std::vector<IntPoly>& seq, int dir) {
  int count = 0, last = 0;
  for (const auto& q : seq) {
    int s = q.lead().sign();
    if (dir < 0 && q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// num * 2^-exp
struct Dyadic {
  BigInt num;
  unsigned exp = 0;

  BigInt den() const { return BigInt(1) << exp; }
  BigRational rational() const { return BigRational(num, den()); }
};

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp, b.exp);
  return {(a.num << (e - a.exp)) + (b.num << (e - b.exp)), e + 1};
}

// a + (b - a) * j / 2^r
Dyadic interpolate(const Dyadic& a, const Dyadic& b, long j, unsigned r) {
  const unsigned e = std::max(a.exp, b.exp);
  const BigInt an = a.num << (e - a.exp);
  const BigInt bn = b.num << (e - b.exp);
  return {(an << r) + (bn - an) * j, e + r};
}

int sign_at(const IntPoly& p, const Dyadic& x) { return sign_at(p, x.num, x.den()); }
int variations(const std::vector<IntPoly>& seq, const Dyadic& x) {
  return variations(seq, x.num, x.den());
}

double to_double(const BigRational& q) { return q.convert_to<double>(); }

unsigned bit_length(const BigInt& x) {
  return x.is_zero() ? 0 : static_cast<unsigned>(msb(abs(x))) + 1;
}

struct Bracket {
  Dyadic lo, hi;
  int vlo, vhi;
};

// A point strictly inside (lo, hi) where p does not vanish.
Dyadic split_point(const IntPoly& p, const Dyadic& lo, const Dyadic& hi) {
  for (unsigned r = 1;; ++r) {
    for (long j = 1; j < (1L << r); j += 2) {
      Dyadic x = interpolate(lo, hi, j, r);
      if (sign_at(p, x) != 0) return x;
    }
  }
}

}  // namespace

int count_real_roots(const IntPoly& p) {
  const auto seq = sturm_sequence(p);
  return variations_at_infinity(seq, -1) - variations_at_infinity(seq, 1);
}

int count_roots_between(const std::vector<IntPoly>& sturm, const BigRational& a,
                        const BigRational& b) {
  return variations(sturm, numerator(a), denominator(a)) -
         variations(sturm, numerator(b), denominator(b));
}

std::vector<RealRoot> isolate_real_roots(const IntPoly& p, double rel_width) {
  if (p.is_zero()) throw InvalidInput("isolate_real_roots: zero polynomial");
  std::vector<RealRoot> out;
  if (p.degree() < 1) return out;
  const auto seq = sturm_sequence(p);

  // Every root lies strictly inside (-2^k, 2^k) by the Cauchy bound.
  unsigned top = 0;
  for (const auto& c : p.coeffs()) top = std::max(top, bit_length(c));
  const int k = std::max(1, static_cast<int>(top) - static_cast<int>(bit_length(p.lead())) + 2);
  Dyadic lo{-(BigInt(1) << k), 0}, hi{BigInt(1) << k, 0};

  std::vector<Bracket> pending{{lo, hi, variations(seq, lo), variations(seq, hi)}};
  std::vector<Bracket> isolated;
  while (!pending.empty()) {
    Bracket b = std::move(pending.back());
    pending.pop_back();
    const int count = b.vlo - b.vhi;
    if (count <= 0) continue;
    if (count == 1) {
      isolated.push_back(std::move(b));
      continue;
    }
    Dyadic mid = split_point(p, b.lo, b.hi);
    const int vm = variations(seq, mid);
    pending.push_back({mid, b.hi, vm, b.vhi});
    pending.push_back({b.lo, std::move(mid), b.vlo, vm});
  }

  for (auto& b : isolated) {
    int slo = sign_at(p, b.lo);
    const int shi = sign_at(p, b.hi);
    double width = to_double(b.hi.rational() - b.lo.rational());
    bool exact = false;
    while (true) {
      const double approx = to_double(midpoint(b.lo, b.hi).rational());
      if (width <= rel_width * std::max(1.0, std::abs(approx))) break;
      Dyadic mid = midpoint(b.lo, b.hi);
      const int sm = sign_at(p, mid);
      width /= 2;
      if (sm == 0) {
        b.lo = mid;
        b.hi = std::move(mid);
        exact = true;
        break;
      }
      if (slo != shi) {
        if (sm == slo)
          b.lo = std::move(mid);
        else
          b.hi = std::move(mid);
        continue;
      }
      // Root of even multiplicity: no sign change, fall back on Sturm counts.
      const int vm = variations(seq, mid);
      if (b.vlo - vm == 1) {
        b.hi = std::move(mid);
        b.vhi = vm;
      } else {
        b.lo = std::move(mid);
        b.vlo = vm;
        slo = sm;
      }
    }
    RealRoot r;
    r.lo = b.lo.rational();
    r.hi = b.hi.rational();
    r.value = exact ? to_double(r.lo) : to_double((r.lo + r.hi) / 2);
    r.refinement_width = exact ? 0.0 : width;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  return out;
}

// ---------------------------------------------------------------------------
// SL(2, R) condition

std::string to_string(Sl2rBranch b) {
  switch (b) {
    case Sl2rBranch::negative: return "negative";
    case Sl2rBranch::above_four_sin_sq: return "above_four_sin_sq";
    case Sl2rBranch::fails: return "fails";
    case Sl2rBranch::boundary: return "boundary";
  }
  return "fails";
}

Sl2rBranch sl2r_condition(double s, double theta, double tol) {
  const double sn = std::sin(theta);
  const double upper = 4 * sn * sn;
  if (std::abs(s) <= tol || std::abs(s - upper) <= tol) return Sl2rBranch::boundary;
  if (s < 0) return Sl2rBranch::negative;
  if (s > upper) return Sl2rBranch::above_four_sin_sq;
  return Sl2rBranch::fails;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

double to_double(const HighReal& x) { return x.convert_to<double>(); }

Eigen::Matrix2cd to_double(const CMatrix2<HighReal>& m) {
  Eigen::Matrix2cd r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = {to_double(HighReal(m(i, j).real())), to_double(HighReal(m(i, j).imag()))};
  return r;
}

Eigen::Matrix2d to_double(const RMatrix2<HighReal>& m) {
  Eigen::Matrix2d r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = to_double(m(i, j));
  return r;
}

HighReal det_error(const RMatrix2<HighReal>& m) {
  using std::abs;
  return abs(m.determinant() - HighReal(1));
}

}  // namespace

bool RepCertificate::valid(double tol) const {
  const bool branch_ok = branch == Sl2rBranch::negative || branch == Sl2rBranch::above_four_sin_sq;
  return branch_ok && residual_relation < tol && residual_central < tol &&
         residual_relation_real < tol && max_imag < tol && det_error < tol;
}

RepCertificate make_certificate(const KnotWord& w, int n, const HighReal& s, const RealRoot& root,
                                Sl2rBranch branch, double margin) {
  const HighReal theta = boost::math::constants::pi<HighReal>() / n;
  RepCertificate c;
  c.n = n;
  c.theta = to_double(theta);
  c.s_star = root;
  c.s_star.value = to_double(s);
  c.branch = branch;
  c.margin = margin;

  const auto rho = build_representation(theta, s);
  c.rho_x = to_double(rho.x);
  c.rho_y = to_double(rho.y);
  c.residual_relation = to_double(HighReal(relation_residual(w, rho.x, rho.y)));
  const CMatrix2<HighReal> central = matrix_power(rho.x, n) + CMatrix2<HighReal>::Identity();
  c.residual_central = to_double(HighReal(max_abs(central)));

  const auto real = conjugate_to_real(rho, theta, s);
  c.t = to_double(real.t);
  c.real_x = to_double(real.x);
  c.real_y = to_double(real.y);
  c.max_imag = to_double(real.max_imag);
  c.residual_relation_real = to_double(HighReal(relation_residual(w, real.x, real.y)));
  c.det_error = to_double(std::max(det_error(real.x), det_error(real.y)));
  return c;
}

bool is_certified(const Verdict& v) { return !std::holds_alternative<Inconclusive>(v); }

std::string verdict_name(const Verdict& v) {
  if (std::holds_alternative<CertifiedLeftOrderable>(v)) return "certified_representation";
  if (std::holds_alternative<CertifiedViaBetti>(v)) return "certified_betti";
  return "inconclusive";
}

std::string to_string(InconclusiveReason r) {
  switch (r) {
    case InconclusiveReason::no_real_root: return "no_real_root";
    case InconclusiveReason::all_roots_fail: return "all_roots_fail";
    case InconclusiveReason::boundary_root: return "boundary_root";
    case InconclusiveReason::certificate_rejected: return "certificate_rejected";
  }
  return "certificate_rejected";
}

KnotAnalysis KnotAnalysis::of(const TwoBridgeKnot& k) {
  return {k, relator_word(k), ordercert::alexander(k), riley_polynomial(k)};
}

Verdict certify(const KnotAnalysis& a, int n, const CertifyOptions& opts) {
  if (n < 2) throw InvalidInput("cover degree n must be at least 2 (got " + std::to_string(n) + ")");
  if (betti_positive(a.alexander, n)) return CertifiedViaBetti{};

  const HighReal theta = boost::math::constants::pi<HighReal>() / n;
  const auto slice = real_slice(a.riley.cos_form, theta);
  const auto roots = isolate_real_roots(slice);
  if (roots.empty()) return Inconclusive{InconclusiveReason::no_real_root};

  const double th = to_double(theta);
  const double upper = 4 * std::sin(th) * std::sin(th);
  const RealRoot* best = nullptr;
  Sl2rBranch best_branch = Sl2rBranch::fails;
  double best_margin = -1;
  for (const auto& r : roots) {
    const Sl2rBranch b = sl2r_condition(r.value, th, opts.strict_tolerance);
    if (b == Sl2rBranch::boundary) return Inconclusive{InconclusiveReason::boundary_root};
    if (b == Sl2rBranch::fails) continue;
    const double margin = std::min(std::abs(r.value), std::abs(r.value - upper));
    if (margin > best_margin) {
      best = &r;
      best_branch = b;
      best_margin = margin;
    }
  }
  if (best == nullptr) return Inconclusive{InconclusiveReason::all_roots_fail};

  const HighReal s = polish_root(slice, *best, HighReal("1e-45"));
  RepCertificate cert = make_certificate(a.word, n, s, *best, best_branch, best_margin);
  if (!cert.valid(opts.tolerance)) return Inconclusive{InconclusiveReason::certificate_rejected};
  return CertifiedLeftOrderable{std::move(cert)};
}

Verdict certify(const TwoBridgeKnot& k, int n, const CertifyOptions& opts) {
  return certify(KnotAnalysis::of(k), n, opts);
}

OrderabilityReport scan(const KnotAnalysis& a, int n_max, const CertifyOptions& opts) {
  if (n_max < 2) throw InvalidInput("n_max must be at least 2 (got " + std::to_string(n_max) + ")");
  OrderabilityReport r;
  r.knot = a.knot;
  r.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) r.verdicts.emplace_back(n, certify(a, n, opts));
  for (auto it = r.verdicts.rbegin(); it != r.verdicts.rend() && is_certified(it->second); ++it)
    r.threshold = it->first;
  return r;
}

OrderabilityReport scan(const TwoBridgeKnot& k, int n_max, const CertifyOptions& opts) {
  return scan(KnotAnalysis::of(k), n_max, opts);
}

std::vector<CurveSample> sample_curve(const CosPoly& f, double from, double to, int steps) {
  if (steps < 2) throw InvalidInput("curve needs at least 2 steps");
  if (!(from > 0 && to < M_PI && from <= to))
    throw InvalidInput("curve range must satisfy 0 < from <= to < pi");
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double theta = from + (to - from) * i / (steps - 1);
    const auto slice = real_slice(f, HighReal(theta));
    CurveSample sample{theta, {}};
    for (const auto& r : isolate_real_roots(slice)) {
      sample.roots.push_back(to_double(polish_root(slice, r, HighReal("1e-30"))));
    }
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace ordercert
