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

#include "ordercert/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordercert/analytic.hpp"
#include "ordercert/covers.hpp"
#include "ordercert/errors.hpp"
#include "ordercert/exactpoly.hpp"
#include "ordercert/knots.hpp"
#include "ordercert/riley.hpp"

namespace ordercert {

std::string format12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format12(x).c_str(), nullptr);
}

namespace {

using json = nlohmann::ordered_json;

json num(double x) { return round12(x); }

json big(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json knot_json(const TwoBridgeKnot& k) {
  return {{"p", k.p},
          {"q", k.q},
          {"original", {{"p", k.input_p}, {"q", k.input_q}}},
          {"mirrored", k.mirrored()}};
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::vector<std::string> warnings;
  CertifyOptions options;
};

json envelope(const std::string& command, const TwoBridgeKnot& k, json payload,
              const std::vector<std::string>& warnings) {
  return {{"tool", kToolName},       {"version", kVersion}, {"command", command},
          {"knot", knot_json(k)},    {"payload", std::move(payload)},
          {"warnings", warnings}};
}

int parse_count(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InvalidInput(what + " must be an integer, got '" + s + "'");
  }
  if (used != s.size()) throw InvalidInput(what + " must be an integer, got '" + s + "'");
  return v;
}

/// Positionals are either "p/q ..." or "p q ...". Returns the knot and
/// leaves the remaining arguments in `rest`.
TwoBridgeKnot take_knot(const std::vector<std::string>& args, std::vector<std::string>& rest) {
  if (args.empty()) throw InvalidInput("missing knot argument (p/q or p q)");
  if (args[0].find('/') != std::string::npos) {
    rest.assign(args.begin() + 1, args.end());
    return parse_knot(args[0]);
  }
  if (args.size() < 2) throw InvalidInput("missing q in knot argument");
  rest.assign(args.begin() + 2, args.end());
  return normalize(parse_count(args[0], "p"), parse_count(args[1], "q"));
}

int take_n(const std::vector<std::string>& rest) {
  if (rest.size() != 1) throw InvalidInput("expected exactly one cover degree n");
  return parse_count(rest[0], "n");
}

void knot_warnings(const TwoBridgeKnot& k, std::vector<std::string>& w) {
  if (k.mirrored())
    w.push_back("q is even; using the mirror image " + to_string(k) +
                " (left-orderability of covers is mirror-invariant)");
}

void guarantee_warning(const TwoBridgeKnot& k, std::vector<std::string>& w) {
  if (k.p % 4 != 3) w.push_back("p is not 3 mod 4; eventual certification is not guaranteed");
}

json complex_matrix(const Eigen::Matrix2cd& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) row.push_back({num(m(i, j).real()), num(m(i, j).imag())});
    rows.push_back(std::move(row));
  }
  return rows;
}

json real_matrix(const Eigen::Matrix2d& m) {
  return {{num(m(0, 0)), num(m(0, 1))}, {num(m(1, 0)), num(m(1, 1))}};
}

json verdict_json(int n, const Verdict& v, bool detail) {
  json j = {{"n", n}, {"verdict", verdict_name(v)}};
  if (const auto* inc = std::get_if<Inconclusive>(&v)) {
    j["reason"] = to_string(inc->reason);
  } else if (const auto* rep = std::get_if<CertifiedLeftOrderable>(&v)) {
    const RepCertificate& c = rep->certificate;
    j["branch"] = to_string(c.branch);
    j["s_star"] = num(c.s_star.value);
    if (detail) {
      j["theta"] = num(c.theta);
      j["s_interval"] = {num(c.s_star.lo.convert_to<double>()), num(c.s_star.hi.convert_to<double>())};
      j["margin"] = num(c.margin);
      j["t"] = num(c.t);
      j["residuals"] = {{"relation", num(c.residual_relation)},
                        {"central", num(c.residual_central)},
                        {"relation_real", num(c.residual_relation_real)},
                        {"max_imag", num(c.max_imag)},
                        {"det_error", num(c.det_error)}};
      j["rho_x"] = complex_matrix(c.rho_x);
      j["rho_y"] = complex_matrix(c.rho_y);
      j["conjugated_real"] = {{"x", real_matrix(c.real_x)}, {"y", real_matrix(c.real_y)}};
    }
  }
  return j;
}

json scan_payload(const OrderabilityReport& r) {
  json verdicts = json::array();
  json certified = json::array();
  for (const auto& [n, v] : r.verdicts) {
    verdicts.push_back(verdict_json(n, v, false));
    if (is_certified(v)) certified.push_back(n);
  }
  json p = {{"n_max", r.n_max}, {"verdicts", std::move(verdicts)}, {"certified", std::move(certified)}};
  p["N0"] = r.threshold ? json(*r.threshold) : json(nullptr);
  return p;
}

CertifyOptions options_from_env(std::vector<std::string>& warnings) {
  CertifyOptions opts;
  if (const char* env = std::getenv("ORDERCERT_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0) || !std::isfinite(tol))
      throw InvalidInput(std::string("ORDERCERT_TOL must be a positive number, got '") + env + "'");
    opts.tolerance = tol;
    warnings.push_back("certificate tolerance overridden by ORDERCERT_TOL=" + format12(tol));
  }
  return opts;
}

int cmd_phi(Context& ctx, const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  const TwoBridgeKnot k = take_knot(args, rest);
  if (!rest.empty()) throw InvalidInput("phi takes only a knot");
  knot_warnings(k, ctx.warnings);
  const RileyPolynomial r = riley_polynomial_unchecked(k);
  const bool metabelian = metabelian_roots_distinct(metabelian_slice(r));
  json payload = {
      {"phi", to_string(r.phi)},
      {"cos_form", r.report.symmetric_ok ? to_string(r.cos_form) : std::string()},
      {"s_degree", s_degree(r.phi)},
      {"sign_flipped", r.sign_flipped},
      {"properties",
       {{"degree", r.report.degree_ok},
        {"nonvanishing", r.report.nonvanishing_ok},
        {"symmetric", r.report.symmetric_ok},
        {"squarefree", r.report.squarefree_ok},
        {"metabelian_distinct", metabelian}}}};
  ctx.out << to_string(r.phi) << '\n';
  ctx.out << envelope("phi", k, std::move(payload), ctx.warnings).dump(2) << '\n';
  if (!r.report.all() || !metabelian) {
    ctx.err << "error: structural property violated for " << to_string(k) << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_certify(Context& ctx, const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  const TwoBridgeKnot k = take_knot(args, rest);
  const int n = take_n(rest);
  if (n < 2) throw InvalidInput("n must be at least 2");
  knot_warnings(k, ctx.warnings);
  guarantee_warning(k, ctx.warnings);
  const Verdict v = certify(KnotAnalysis::of(k), n, ctx.options);
  ctx.out << envelope("certify", k, verdict_json(n, v, true), ctx.warnings).dump(2) << '\n';
  return kExitOk;
}

void check_n_max(int n_max) {
  if (n_max < 2 || n_max > 10000) throw InvalidInput("--n-max must lie in [2, 10000]");
}

int cmd_scan(Context& ctx, const std::vector<std::string>& args, int n_max) {
  std::vector<std::string> rest;
  const TwoBridgeKnot k = take_knot(args, rest);
  if (!rest.empty()) throw InvalidInput("scan takes only a knot");
  check_n_max(n_max);
  knot_warnings(k, ctx.warnings);
  guarantee_warning(k, ctx.warnings);
  const auto report = scan(KnotAnalysis::of(k), n_max, ctx.options);
  ctx.out << envelope("scan", k, scan_payload(report), ctx.warnings).dump(2) << '\n';
  return kExitOk;
}

int cmd_batch(Context& ctx, int p_max, int n_max, std::optional<int> pmod4) {
  if (p_max < 3) throw InvalidInput("--p-max must be at least 3");
  check_n_max(n_max);
  if (pmod4 && *pmod4 != 1 && *pmod4 != 3) throw InvalidInput("--pmod4 must be 1 or 3");
  for (const auto& k : enumerate_knots(p_max)) {
    if (pmod4 && k.p % 4 != *pmod4) continue;
    std::vector<std::string> warnings = ctx.warnings;
    guarantee_warning(k, warnings);
    const auto report = scan(KnotAnalysis::of(k), n_max, ctx.options);
    json inconclusive = json::array();
    for (const auto& [n, v] : report.verdicts)
      if (!is_certified(v)) inconclusive.push_back(n);
    json payload = {{"n_max", n_max}};
    payload["N0"] = report.threshold ? json(*report.threshold) : json(nullptr);
    payload["inconclusive"] = std::move(inconclusive);
    ctx.out << envelope("batch", k, std::move(payload), warnings).dump() << '\n';
    ctx.out.flush();
  }
  return kExitOk;
}

GroupPresentation cover_of(const TwoBridgeKnot& k, int n, bool branched) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  GroupPresentation p = cyclic_cover_presentation(knot_group(k), n);
  return branched ? branched_quotient(p) : p;
}

int cmd_presentation(Context& ctx, const std::vector<std::string>& args, bool branched) {
  std::vector<std::string> rest;
  const TwoBridgeKnot k = take_knot(args, rest);
  const int n = take_n(rest);
  ctx.out << format_presentation(cover_of(k, n, branched));
  return kExitOk;
}

int cmd_homology(Context& ctx, const std::vector<std::string>& args, bool unbranched) {
  std::vector<std::string> rest;
  const TwoBridgeKnot k = take_knot(args, rest);
  const int n = take_n(rest);
  knot_warnings(k, ctx.warnings);
  const SNFResult snf = abelianization(cover_of(k, n, !unbranched));
  json diagonal = json::array();
  for (const auto& d : snf.diagonal) diagonal.push_back(big(d));
  json payload = {{"n", n}, {"branched", !unbranched}, {"diagonal", std::move(diagonal)},
                  {"betti", snf.betti}};
  payload["torsion_order"] = snf.torsion_order ? big(*snf.torsion_order) : json(nullptr);
  if (!unbranched) {
    const auto fox = fox_formula_order(alexander(k), n);
    payload["fox_order"] = fox ? big(*fox) : json(nullptr);
    payload["agrees"] = fox == snf.torsion_order;
  }
  ctx.out << envelope("homology", k, std::move(payload), ctx.warnings).dump(2) << '\n';
  return kExitOk;
}

int cmd_curve(Context& ctx, const std::vector<std::string>& args, double from, double to,
              int steps) {
  std::vector<std::string> rest;
  const TwoBridgeKnot k = take_knot(args, rest);
  if (!rest.empty()) throw InvalidInput("curve takes only a knot");
  knot_warnings(k, ctx.warnings);
  for (const auto& w : ctx.warnings) ctx.err << "warning: " << w << '\n';
  const auto samples = sample_curve(riley_polynomial(k).cos_form, from, to, steps);
  std::size_t width = 0;
  for (const auto& s : samples) width = std::max(width, s.roots.size());
  ctx.out << "theta";
  for (std::size_t i = 1; i <= width; ++i) ctx.out << ",root_" << i;
  ctx.out << '\n';
  for (const auto& s : samples) {
    ctx.out << format12(s.theta);
    for (std::size_t i = 0; i < width; ++i) {
      ctx.out << ',';
      if (i < s.roots.size()) ctx.out << format12(s.roots[i]);
    }
    ctx.out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify left-orderability of cyclic branched covers of two-bridge knots"};
  app.name(kToolName);
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.footer(
      "Knots are given as p/q (or as two integers p q); even q is replaced by p - q.\n"
      "Exit codes: 0 success, 1 internal error, 2 invalid input.\n"
      "Environment:\n"
      "  ORDERCERT_TOL  certificate residual tolerance (default 1e-9)");

  std::vector<std::string> args;
  int n_max = 20, p_max = 0, steps = 100;
  std::optional<int> pmod4;
  double from = 0.01, to = 1.0;
  bool branched = false, unbranched = false;

  auto* phi = app.add_subcommand("phi", "Riley polynomial and its structural properties");
  phi->add_option("knot", args, "p/q")->required();
  auto* cert = app.add_subcommand("certify", "Certify the n-th cyclic branched cover");
  cert->add_option("args", args, "p/q n")->required();
  auto* sc = app.add_subcommand("scan", "Certify n = 2 .. n-max and report the certified tail");
  sc->add_option("knot", args, "p/q")->required();
  sc->add_option("--n-max", n_max, "largest cover degree")->capture_default_str();
  auto* batch = app.add_subcommand("batch", "Scan every normalized knot with p <= p-max (JSON lines)");
  batch->add_option("--p-max", p_max, "largest p")->required();
  batch->add_option("--n-max", n_max, "largest cover degree")->capture_default_str();
  batch->add_option("--pmod4", pmod4, "keep only p = 1 or p = 3 mod 4");
  auto* pres = app.add_subcommand("presentation", "Presentation of the n-fold cyclic cover group");
  pres->add_option("args", args, "p/q n")->required();
  pres->add_flag("--branched", branched, "kill the n-th power of the meridian");
  auto* hom = app.add_subcommand("homology", "First homology of the branched cover and the Fox order");
  hom->add_option("args", args, "p/q n")->required();
  hom->add_flag("--unbranched", unbranched, "use the unbranched cover instead");
  auto* curve = app.add_subcommand("curve", "CSV of the real roots s(theta) of the real slice");
  curve->add_option("knot", args, "p/q")->required();
  curve->add_option("--from", from, "first theta")->capture_default_str();
  curve->add_option("--to", to, "last theta")->capture_default_str();
  curve->add_option("--steps,--theta-steps", steps, "number of samples")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  Context ctx{out, err, {}, {}};
  try {
    ctx.options = options_from_env(ctx.warnings);
    if (*phi) return cmd_phi(ctx, args);
    if (*cert) return cmd_certify(ctx, args);
    if (*sc) return cmd_scan(ctx, args, n_max);
    if (*batch) return cmd_batch(ctx, p_max, n_max, pmod4);
    if (*pres) return cmd_presentation(ctx, args, branched);
    if (*hom) return cmd_homology(ctx, args, unbranched);
    if (*curve) return cmd_curve(ctx, args, from, to, steps);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace ordercert
