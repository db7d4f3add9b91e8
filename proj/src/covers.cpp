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

#include "ordercert/covers.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ordercert/errors.hpp"
#include "ordercert/subresultant.hpp"

namespace ordercert {

std::vector<Syllable> free_reduce(const std::vector<Syllable>& letters) {
  std::vector<Syllable> out;
  out.reserve(letters.size());
  for (const auto& s : letters) {
    if (!out.empty() && out.back().gen == s.gen && out.back().exponent == -s.exponent)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

Word::Word(std::vector<Syllable> letters) : letters_(free_reduce(letters)) {}

void Word::push_back(Syllable s) {
  if (!letters_.empty() && letters_.back().gen == s.gen && letters_.back().exponent == -s.exponent)
    letters_.pop_back();
  else
    letters_.push_back(s);
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->exponent});
  return w;
}

std::vector<long> Word::exponent_sums(int generator_count) const {
  std::vector<long> sums(static_cast<std::size_t>(generator_count), 0);
  for (const auto& s : letters_) sums.at(static_cast<std::size_t>(s.gen)) += s.exponent;
  return sums;
}

Word operator*(Word a, const Word& b) {
  for (const auto& s : b.letters_) a.push_back(s);
  return a;
}

GroupPresentation knot_group(const TwoBridgeKnot& k) {
  constexpr int x = 0, y = 1;
  Word w;
  for (const auto& l : relator_word(k)) w.push_back({l.gen == Generator::x ? x : y, l.exponent});
  Word r = w * Word({{x, 1}}) * w.inverse() * Word({{y, -1}});
  return {{"x", "y"}, {std::move(r)}, x};
}

GroupPresentation cyclic_cover_presentation(const GroupPresentation& p, int n) {
  if (n < 1) throw InvalidInput("cover degree must be at least 1");
  const int g = p.generator_count();
  if (p.meridian < 0 || p.meridian >= g) throw InvalidInput("meridian index out of range");

  // Non-meridian generators in their original order.
  std::vector<int> slot(static_cast<std::size_t>(g), -1);
  int others = 0;
  for (int i = 0; i < g; ++i)
    if (i != p.meridian) slot[static_cast<std::size_t>(i)] = others++;
  const int a = n * others;

  GroupPresentation out;
  out.generator_names.reserve(static_cast<std::size_t>(a + 1));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < g; ++i)
      if (i != p.meridian)
        out.generator_names.push_back(p.generator_names[static_cast<std::size_t>(i)] + "_" +
                                      std::to_string(k));
  out.generator_names.push_back("a");
  out.meridian = a;

  // gamma(c, gen) = x^c gen x^-(c+1 mod n); trivial for the meridian unless c = n-1.
  auto gamma = [&](int c, int gen) -> std::optional<int> {
    if (gen == p.meridian) return c == n - 1 ? std::optional<int>(a) : std::nullopt;
    return c * others + slot[static_cast<std::size_t>(gen)];
  };

  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    long total = 0;
    for (const auto& s : p.relators[j].letters()) total += s.exponent;
    if (total % n != 0)
      throw NotOntoZn("relator " + std::to_string(j) + " does not map to 0 in Z/" +
                      std::to_string(n));
  }
  for (int k = 0; k < n; ++k) {
    for (const auto& r : p.relators) {
      Word rewritten;
      int c = k;
      for (const auto& s : r.letters()) {
        if (s.exponent > 0) {
          if (auto id = gamma(c, s.gen)) rewritten.push_back({*id, 1});
          c = (c + 1) % n;
        } else {
          c = (c + n - 1) % n;
          if (auto id = gamma(c, s.gen)) rewritten.push_back({*id, -1});
        }
      }
      out.relators.push_back(std::move(rewritten));
    }
  }
  return out;
}

GroupPresentation branched_quotient(const GroupPresentation& cover) {
  if (cover.generator_names.empty()) throw InvalidInput("branched_quotient: empty presentation");
  const int killed = cover.generator_count() - 1;
  GroupPresentation out;
  out.generator_names.assign(cover.generator_names.begin(), cover.generator_names.end() - 1);
  out.meridian = 0;
  for (const auto& r : cover.relators) {
    Word w;
    for (const auto& s : r.letters())
      if (s.gen != killed) w.push_back(s);
    out.relators.push_back(std::move(w));
  }
  return out;
}

IntMatrix relation_matrix(const GroupPresentation& p) {
  const int g = p.generator_count();
  IntMatrix m(static_cast<Eigen::Index>(p.relators.size()), g);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const auto sums = p.relators[static_cast<std::size_t>(i)].exponent_sums(g);
    for (int j = 0; j < g; ++j) m(i, j) = sums[static_cast<std::size_t>(j)];
  }
  return m;
}

namespace {

void swap_rows(IntMatrix& m, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  for (Eigen::Index j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  for (Eigen::Index i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row(dst) -= f * row(src)
void row_sub(IntMatrix& m, Eigen::Index dst, Eigen::Index src, const BigInt& f) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    BigInt t = f * m(src, j);
    m(dst, j) -= t;
  }
}

void col_sub(IntMatrix& m, Eigen::Index dst, Eigen::Index src, const BigInt& f) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    BigInt t = f * m(i, src);
    m(i, dst) -= t;
  }
}

}  // namespace

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  const Eigen::Index size = std::min(rows, cols);
  std::vector<BigInt> diag;
  diag.reserve(static_cast<std::size_t>(size));
  for (Eigen::Index t = 0; t < size; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (!m(i, j).is_zero() && (pi < 0 || abs(m(i, j)) < abs(m(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      swap_rows(m, t, pi);
      swap_cols(m, t, pj);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (m(i, t).is_zero()) continue;
        BigInt q = m(i, t) / m(t, t);
        row_sub(m, i, t, q);
        if (!m(i, t).is_zero()) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (m(t, j).is_zero()) continue;
        BigInt q = m(t, j) / m(t, t);
        col_sub(m, j, t, q);
        if (!m(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (!BigInt(m(i, j) % m(t, t)).is_zero()) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_sub(m, t, bad, BigInt(-1));
    }
    diag.push_back(abs(m(t, t)));
  }
  return diag;
}

SNFResult abelianization(const GroupPresentation& p) {
  SNFResult r;
  r.diagonal = smith_diagonal(relation_matrix(p));
  r.diagonal.resize(static_cast<std::size_t>(p.generator_count()), BigInt(0));
  BigInt order = 1;
  for (const auto& d : r.diagonal) {
    if (d.is_zero())
      ++r.betti;
    else
      order *= d;
  }
  if (r.betti == 0) r.torsion_order = order;
  return r;
}

std::optional<BigInt> fox_formula_order(const AlexPoly& delta, int n) {
  if (n < 1) throw InvalidInput("cover degree must be at least 1");
  const IntPoly cyclic(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
  BigInt res = abs(resultant(delta, cyclic));
  if (res.is_zero()) return std::nullopt;
  return res;
}

std::string format_presentation(const GroupPresentation& p) {
  std::ostringstream out;
  out << "generators " << p.generator_count() << '\n';
  for (int i = 0; i < p.generator_count(); ++i)
    out << 'g' << i << ' ' << p.generator_names[static_cast<std::size_t>(i)] << '\n';
  out << "relators " << p.relators.size() << '\n';
  for (const auto& r : p.relators) {
    if (r.empty()) {
      out << "1\n";
      continue;
    }
    bool first = true;
    for (const auto& s : r.letters()) {
      if (!first) out << ' ';
      first = false;
      out << 'g' << s.gen;
      if (s.exponent < 0) out << "^-1";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ordercert
