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

// End-to-end gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordercert/analytic.hpp"
#include "ordercert/covers.hpp"
#include "ordercert/exactpoly.hpp"
#include "ordercert/knots.hpp"
#include "ordercert/riley.hpp"
#include "support.hpp"

#ifndef ORDERCERT_CLI
#error "ORDERCERT_CLI must name the command-line binary"
#endif

using namespace ordercert;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

const double kPi = std::acos(-1.0);

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured run_cli_process(const std::string& args) {
  Captured c;
  const std::string cmd = std::string("\"") + ORDERCERT_CLI + "\" " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return c;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe.get())) > 0) c.out.append(buf, n);
  c.status = pclose(pipe.release());
  return c;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

BivarPoly term(long c, int m_power, int s_power = 0) {
  return BivarPoly::monomial(IntLaurent::monomial(BigInt(c), m_power), s_power);
}

const RepCertificate* certificate_of(const Verdict& v) {
  if (const auto* c = std::get_if<CertifiedLeftOrderable>(&v)) return &c->certificate;
  return nullptr;
}

// ---------------------------------------------------------------------------

Outcome golden_phi() {
  Outcome o;
  // s^3 + (2 M2 - 3) s^2 + (M4 - 3 M2 + 6) s + 2 M2 - 3, Mk = m^k + m^-k.
  const BivarPoly m2 = term(1, 2) + term(1, -2);
  const BivarPoly m4 = term(1, 4) + term(1, -4);
  const BivarPoly s = term(1, 0, 1);
  const BivarPoly three = term(3, 0), six = term(6, 0), two = term(2, 0);
  const BivarPoly expected = s * s * s + (two * m2 - three) * s * s + (m4 - three * m2 + six) * s +
                             two * m2 - three;

  const auto t0 = Clock::now();
  const Captured c = run_cli_process("phi 7/4");
  const double elapsed = seconds_since(t0);
  const auto lines = split_lines(c.out);
  o.require(c.status == 0, "nonzero exit");
  o.require(!lines.empty() && lines[0] == to_string(expected), "printed polynomial differs");
  o.require(riley_polynomial(normalize(7, 4)).phi == expected, "library polynomial differs");
  o.require(elapsed < 1.0, "too slow");
  o.detail << (o.pass ? "" : "; ") << "runtime " << elapsed << " s";
  return o;
}

Outcome structural_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  int count = 0, failures = 0;
  for (const auto& k : enumerate_knots(99)) {
    const auto r = riley_polynomial_unchecked(k);
    const bool ok = r.report.all() && metabelian_roots_distinct(metabelian_slice(r));
    if (!ok) {
      if (failures == 0) o.detail << "first failure " << to_string(k) << "; ";
      ++failures;
    }
    ++count;
  }
  const double elapsed = seconds_since(t0);
  o.require(failures == 0, "");
  o.require(elapsed < 60.0, "too slow; ");
  o.detail << count << " knots, " << failures << " failures, runtime " << elapsed << " s";
  return o;
}

Outcome knot52_certification() {
  Outcome o;
  const auto report = scan(normalize(7, 4), 20);
  o.require(report.threshold == 9, "N0 != 9; ");
  for (const auto& [n, v] : report.verdicts)
    if (n <= 8) o.require(std::holds_alternative<Inconclusive>(v), "n <= 8 certified; ");
  const RepCertificate* c = nullptr;
  for (const auto& [n, v] : report.verdicts)
    if (n == 9) c = certificate_of(v);
  o.require(c != nullptr, "no representation certificate at n = 9; ");
  if (c) {
    o.require(std::abs(c->s_star.value + 0.03667) <= 5e-5, "s* off; ");
    o.require(c->residual_relation < 1e-9, "relation residual; ");
    o.require(c->residual_central < 1e-9, "x^9 != -I; ");
    o.require(c->max_imag < 1e-9, "conjugated pair not real; ");
    o.require(c->residual_relation_real < 1e-9, "real relation residual; ");
    o.detail << "N0 " << report.threshold.value_or(-1) << ", s* " << c->s_star.value
             << ", residuals " << c->residual_relation << " / " << c->residual_central << " / "
             << c->max_imag;
  }
  return o;
}

Outcome trefoil_closed_form() {
  Outcome o;
  const auto report = scan(normalize(3, 1), 30);
  std::vector<int> certified;
  double worst = 0;
  for (const auto& [n, v] : report.verdicts) {
    if (is_certified(v)) certified.push_back(n);
    const bool betti = std::holds_alternative<CertifiedViaBetti>(v);
    o.require(betti == (n % 6 == 0), "Betti verdict at wrong n; ");
    if (n >= 7 && n % 6 != 0) {
      const RepCertificate* c = certificate_of(v);
      o.require(c != nullptr, "missing representation certificate; ");
      if (c) {
        const double cs = std::cos(kPi / n);
        worst = std::max(worst, std::abs(c->s_star.value - (3 - 4 * cs * cs)));
      }
    }
  }
  std::vector<int> expected{6};
  for (int n = 7; n <= 30; ++n) expected.push_back(n);
  o.require(certified == expected, "certified set differs; ");
  o.require(worst <= 1e-9, "root off closed form; ");
  o.detail << certified.size() << " certified, max root error " << worst;
  return o;
}

struct BatchResult {
  std::map<std::string, int> threshold;  // knot -> N0
  Outcome outcome;
};

BatchResult desk_scale_batch() {
  BatchResult r;
  Outcome& o = r.outcome;
  const auto t0 = Clock::now();
  const Captured c = run_cli_process("batch --pmod4 3 --p-max 43 --n-max 200");
  const double elapsed = seconds_since(t0);
  o.require(c.status == 0, "nonzero exit; ");
  const auto lines = split_lines(c.out);
  int expected = 0;
  for (const auto& k : enumerate_knots(43))
    if (k.p % 4 == 3) ++expected;
  o.require(static_cast<int>(lines.size()) == expected, "line count differs; ");
  int missing = 0, worst = 0;
  for (const auto& line : lines) {
    const json j = json::parse(line);
    const auto& n0 = j["payload"]["N0"];
    if (n0.is_null() || n0.get<int>() > 200) {
      ++missing;
      continue;
    }
    worst = std::max(worst, n0.get<int>());
    r.threshold[std::to_string(j["knot"]["p"].get<int>()) + "/" +
                std::to_string(j["knot"]["q"].get<int>())] = n0.get<int>();
  }
  o.require(missing == 0, "null N0; ");
  o.require(elapsed < 600.0, "too slow; ");
  o.detail << lines.size() << " knots, " << missing << " without N0, max N0 " << worst
           << ", runtime " << elapsed << " s";
  return r;
}

Outcome homology_equivalence() {
  Outcome o;
  int compared = 0, mismatches = 0;
  for (const auto& k : enumerate_knots(45)) {
    const auto group = knot_group(k);
    const auto delta = alexander(k);
    for (int n = 1; n <= 8; ++n) {
      const auto snf = abelianization(branched_quotient(cyclic_cover_presentation(group, n)));
      if (snf.betti != 0) continue;
      ++compared;
      if (snf.torsion_order != fox_formula_order(delta, n)) {
        if (mismatches == 0) o.detail << "first mismatch " << to_string(k) << " n=" << n << "; ";
        ++mismatches;
      }
    }
  }
  o.require(mismatches == 0, "");
  const auto order = [](int p, int q, int n) {
    const auto snf =
        abelianization(branched_quotient(cyclic_cover_presentation(knot_group(normalize(p, q)), n)));
    return snf.torsion_order.value_or(BigInt(0));
  };
  o.require(order(3, 1, 2) == 3, "trefoil n=2; ");
  o.require(order(7, 3, 2) == 7, "5_2 n=2; ");
  o.require(order(7, 3, 3) == 25, "5_2 n=3; ");
  o.detail << compared << " (knot, n) pairs, " << mismatches << " mismatches";
  return o;
}

Outcome alexander_checks() {
  Outcome o;
  int count = 0, failures = 0;
  for (const auto& k : enumerate_knots(99)) {
    const auto d = alexander(k);
    BigInt at_one = 0, at_minus_one = 0;
    for (int i = 0; i <= d.degree(); ++i) {
      at_one += d[i];
      at_minus_one += (i % 2 == 0) ? d[i] : BigInt(-d[i]);
    }
    bool palindromic = true;
    for (int i = 0; i <= d.degree(); ++i) palindromic = palindromic && d[i] == d[d.degree() - i];
    const bool ok = abs(at_minus_one) == k.p && abs(at_one) == 1 && palindromic;
    if (!ok) {
      if (failures == 0) o.detail << "first failure " << to_string(k) << "; ";
      ++failures;
    }
    ++count;
  }
  o.require(failures == 0, "");
  o.detail << count << " knots, " << failures << " failures";
  return o;
}

Outcome property_numerics(const std::map<std::string, int>& thresholds) {
  Outcome o;
  std::mt19937 rng(20260501);
  int comparable = 0, disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto cmp = testing::compare_with_grid(testing::random_real_poly(rng, 9));
    if (!cmp.comparable) continue;
    ++comparable;
    if (!cmp.agrees) ++disagreements;
  }
  o.require(disagreements == 0, "Sturm count disagrees with grid; ");
  o.require(comparable >= 900, "too few comparable polynomials; ");

  std::vector<std::pair<TwoBridgeKnot, int>> pool;
  for (const auto& k : enumerate_knots(43))
    if (k.p % 4 == 3)
      if (auto it = thresholds.find(to_string(k)); it != thresholds.end())
        pool.emplace_back(k, it->second);
  o.require(!pool.empty(), "no certified knots to sample; ");
  std::map<std::string, KnotAnalysis> cache;
  int slices = 0, attempts = 0;
  double worst = 0;
  while (!pool.empty() && slices < 100 && attempts < 1000) {
    ++attempts;
    const auto& [k, n0] = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const int n = std::uniform_int_distribution<int>(n0, 200)(rng);
    auto it = cache.find(to_string(k));
    if (it == cache.end()) it = cache.emplace(to_string(k), KnotAnalysis::of(k)).first;
    const Verdict v = certify(it->second, n);
    o.require(is_certified(v), "sampled n inside the window not certified; ");
    const RepCertificate* c = certificate_of(v);
    if (!c) continue;
    ++slices;
    const double trace_error =
        std::max(std::abs(c->real_x.trace() - c->rho_x.trace().real()),
                 std::abs(c->real_y.trace() - c->rho_y.trace().real()));
    worst = std::max({worst, trace_error, c->residual_relation, c->residual_relation_real,
                      c->max_imag});
  }
  o.require(slices == 100, "fewer than 100 certified slices; ");
  o.require(worst <= 1e-9, "trace or residual above tolerance; ");
  o.detail << comparable << " comparable polynomials, " << disagreements << " disagreements; "
           << slices << " slices, max error " << worst;
  return o;
}

}  // namespace

int main() {
  bool all = true;
  const auto report = [&](int id, const std::string& name, const Outcome& o) {
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name << " ("
              << o.detail.str() << ")" << std::endl;
    all = all && o.pass;
  };
  const auto guarded = [&](int id, const std::string& name, auto&& body) {
    try {
      report(id, name, body());
    } catch (const std::exception& e) {
      Outcome o;
      o.require(false, std::string("exception: ") + e.what());
      report(id, name, o);
    }
  };

  guarded(1, "golden phi for 7/4", golden_phi);
  guarded(2, "structural properties for p <= 99", structural_suite);
  guarded(3, "7/3 scan and n = 9 certificate", knot52_certification);
  guarded(4, "trefoil certified set and closed form", trefoil_closed_form);
  std::map<std::string, int> thresholds;
  guarded(5, "batch N0 for p = 3 mod 4, p <= 43", [&] {
    auto b = desk_scale_batch();
    thresholds = std::move(b.threshold);
    return std::move(b.outcome);
  });
  guarded(6, "SNF torsion equals Fox order", homology_equivalence);
  guarded(7, "Alexander polynomial checks", alexander_checks);
  guarded(8, "Sturm vs grid and conjugation properties", [&] { return property_numerics(thresholds); });
  return all ? 0 : 1;
}
