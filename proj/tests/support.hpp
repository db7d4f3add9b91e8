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

// Shared oracles for the unit and acceptance tests.

#ifndef ORDERCERT_TESTS_SUPPORT_HPP
#define ORDERCERT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ordercert/analytic.hpp"

namespace ordercert::testing {

inline double horner(const std::vector<double>& c, double x) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Leading coefficient of magnitude in [0.5, 1], the rest uniform in [-1, 1].
inline std::vector<double> random_real_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_real_distribution<double> coef(-1.0, 1.0), lead(0.5, 1.0);
  std::bernoulli_distribution neg(0.5);
  std::vector<double> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  c.back() = neg(rng) ? -lead(rng) : lead(rng);
  return c;
}

/// Sign changes of p on a uniform grid of step h covering the Cauchy bound.
/// The grid is offset by an irrational fraction of h so it avoids the
/// dyadic and rational points the generators produce.
inline std::vector<double> grid_sign_changes(const std::vector<double>& c, double h = 1e-4) {
  double bound = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, std::abs(c[i] / c.back()));
  bound += 1;
  std::vector<double> at;
  double x = -bound - h * 0.3183098861837907;
  double prev = horner(c, x);
  const long steps = static_cast<long>(2 * bound / h) + 2;
  for (long i = 1; i <= steps; ++i) {
    const double nx = x + h;
    const double v = horner(c, nx);
    if ((v < 0) != (prev < 0) && v != 0 && prev != 0) at.push_back(0.5 * (x + nx));
    x = nx;
    prev = v;
  }
  return at;
}

struct SturmComparison {
  bool comparable = false;  // all roots separated by more than two grid steps
  bool agrees = false;
};

/// Compare isolate_real_roots against the grid sweep: equal counts, and
/// every isolating interval carries a grid sign change within one step.
inline SturmComparison compare_with_grid(const std::vector<double>& c, double h = 1e-4) {
  const RealSlice<double> slice{0.0, c};
  const auto roots = isolate_real_roots(slice);
  SturmComparison out;
  if (count_real_roots(rational_approximation(slice)) != static_cast<int>(roots.size())) return out;
  out.comparable = true;
  for (std::size_t i = 1; i < roots.size(); ++i)
    if (roots[i].value - roots[i - 1].value <= 2 * h) out.comparable = false;
  if (!out.comparable) return out;
  const auto changes = grid_sign_changes(c, h);
  out.agrees = changes.size() == roots.size();
  for (std::size_t i = 0; out.agrees && i < roots.size(); ++i)
    out.agrees = std::abs(changes[i] - roots[i].value) <= h;
  return out;
}

}  // namespace ordercert::testing

#endif
