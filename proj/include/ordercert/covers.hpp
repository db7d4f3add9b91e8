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

#ifndef ORDERCERT_COVERS_HPP
#define ORDERCERT_COVERS_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "ordercert/knots.hpp"
#include "ordercert/poly.hpp"

namespace ordercert {

struct Syllable {
  int gen;
  int exponent;  // +1 or -1

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in the generators of a presentation.
class Word {
 public:
  Word() = default;
  /// Reduces on construction.
  explicit Word(std::vector<Syllable> letters);

  const std::vector<Syllable>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Append one letter, cancelling against the end if possible.
  void push_back(Syllable s);
  Word inverse() const;
  /// Exponent sum of each generator.
  std::vector<long> exponent_sums(int generator_count) const;

  friend Word operator*(Word a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> letters_;
};

/// Free reduction of an arbitrary letter sequence.
std::vector<Syllable> free_reduce(const std::vector<Syllable>& letters);

struct GroupPresentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
  int meridian = 0;

  int generator_count() const { return static_cast<int>(generator_names.size()); }
  int deficiency() const { return generator_count() - static_cast<int>(relators.size()); }
};

/// <x, y | w x w^-1 y^-1>, meridian x.
GroupPresentation knot_group(const TwoBridgeKnot& k);

/// Reidemeister-Schreier presentation of the kernel of P -> Z_n, where
/// every generator maps to 1, with transversal {meridian^k : 0 <= k < n}.
///
/// Generators are ordered as gamma(k, g) for k = 0..n-1 and each
/// non-meridian g (named g + "_" + k), followed by meridian^n (named "a").
/// Relator j * n + k is the rewrite of meridian^k r_j meridian^-k.
/// Throws NotOntoZn if a relator does not lie in the kernel.
GroupPresentation cyclic_cover_presentation(const GroupPresentation& p, int n);

/// Delete the meridian^n generator (the last one) from a cover presentation.
/// Relators that become trivial are kept as empty words.
GroupPresentation branched_quotient(const GroupPresentation& cover);

using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

/// Rows are relators, columns are generators.
IntMatrix relation_matrix(const GroupPresentation& p);

struct SNFResult {
  /// One entry per generator: the nonnegative invariant factors followed
  /// by zeros for free rank, d1 | d2 | ...
  std::vector<BigInt> diagonal;
  int betti = 0;
  /// Product of the finite invariant factors; empty when betti > 0.
  std::optional<BigInt> torsion_order;
};

/// Smith normal form diagonal of an integer matrix, min(rows, cols) long.
std::vector<BigInt> smith_diagonal(IntMatrix m);

SNFResult abelianization(const GroupPresentation& p);

/// |Res(delta, 1 + t + ... + t^(n-1))|, or empty when it vanishes.
std::optional<BigInt> fox_formula_order(const AlexPoly& delta, int n);

/// Plain-text form:
///
///   generators <k>
///   g<i> <name>          (one line per generator)
///   relators <r>
///   <word>               (one line per relator)
///
/// Words are space-separated tokens g<i> or g<i>^-1; the empty word is "1".
std::string format_presentation(const GroupPresentation& p);

}  // namespace ordercert

#endif
