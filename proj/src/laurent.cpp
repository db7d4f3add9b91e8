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

#include "ordercert/laurent.hpp"

#include <algorithm>

namespace ordercert {

IntLaurent IntLaurent::monomial(const BigInt& c, int exponent) {
  IntLaurent r;
  if (c.is_zero()) return r;
  r.low_ = exponent;
  r.c_.push_back(c);
  return r;
}

IntLaurent IntLaurent::from_terms(const std::map<int, BigInt>& terms) {
  IntLaurent r;
  if (terms.empty()) return r;
  r.low_ = terms.begin()->first;
  r.c_.resize(static_cast<std::size_t>(terms.rbegin()->first - r.low_ + 1));
  for (const auto& [k, c] : terms) r.c_[static_cast<std::size_t>(k - r.low_)] = c;
  r.trim();
  return r;
}

BigInt IntLaurent::coeff(int exponent) const {
  const int i = exponent - low_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

std::vector<std::pair<int, BigInt>> IntLaurent::terms() const {
  std::vector<std::pair<int, BigInt>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) out.emplace_back(low_ + static_cast<int>(i), c_[i]);
  return out;
}

IntLaurent IntLaurent::mirror() const {
  IntLaurent r;
  if (c_.empty()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.low_ = -high();
  return r;
}

IntLaurent IntLaurent::shifted(int k) const {
  IntLaurent r = *this;
  if (!r.c_.empty()) r.low_ += k;
  return r;
}

bool IntLaurent::is_symmetric() const {
  if (c_.empty()) return true;
  if (low_ != -high()) return false;
  return std::equal(c_.begin(), c_.begin() + static_cast<long>(c_.size() / 2), c_.rbegin());
}

BigInt IntLaurent::sum_of_coeffs() const {
  BigInt s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

bool IntLaurent::is_constant(long c) const {
  if (c == 0) return c_.empty();
  return c_.size() == 1 && low_ == 0 && c_[0] == c;
}

IntLaurent& IntLaurent::operator+=(const IntLaurent& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), BigInt());
  low_ = lo;
  c_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto off = static_cast<std::size_t>(o.low_ - lo);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[off + i] += o.c_[i];
  trim();
  return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& o) { return *this += -o; }

IntLaurent& IntLaurent::operator*=(const BigInt& k) {
  if (k.is_zero()) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
  IntLaurent r;
  r.add_product(a, b);
  return r;
}

void IntLaurent::add_product(const IntLaurent& a, const IntLaurent& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  const int plo = a.low_ + b.low_;
  const int phi = a.high() + b.high();
  if (c_.empty()) {
    low_ = plo;
    c_.resize(static_cast<std::size_t>(phi - plo + 1));
  } else {
    const int lo = std::min(low_, plo);
    const int hi = std::max(high(), phi);
    if (lo < low_) c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), BigInt());
    low_ = lo;
    c_.resize(static_cast<std::size_t>(hi - lo + 1));
  }
  const auto off = static_cast<std::size_t>(plo - low_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      ordercert::add_product(c_[off + i + j], a.c_[i], b.c_[j]);
  }
  trim();
}

void IntLaurent::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

}  // namespace ordercert
