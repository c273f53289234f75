// Copyright 2026 The isofiber Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isofiber/enumeration.hpp"

#include <cmath>
#include <numeric>

#include "isofiber/errors.hpp"
#include "isofiber/heights.hpp"

namespace isofiber {

bool canonical_less(const Rational& a, const Rational& b) {
  BigInt ha = height_rational(a), hb = height_rational(b);
  if (ha != hb) return ha < hb;
  int ca = mpz_cmpabs(a.get_num_mpz_t(), b.get_num_mpz_t());
  if (ca != 0) return ca < 0;
  int sa = sgn(a), sb = sgn(b);
  if (sa != sb) return sa > sb;
  return a.get_den() < b.get_den();
}

RationalEnumerator::RationalEnumerator(std::uint64_t bound) : bound_(bound) {}

void RationalEnumerator::fill_block() {
  block_.clear();
  pos_ = 0;
  ++height_;
  const auto h = static_cast<unsigned long>(height_);
  if (height_ == 1) {
    block_ = {Rational(0), Rational(1), Rational(-1)};
    return;
  }
  for (unsigned long a = 1; a < h; ++a) {
    if (std::gcd(a, h) != 1) continue;
    block_.emplace_back(static_cast<long>(a), h);
    block_.emplace_back(-static_cast<long>(a), h);
  }
  for (int sign : {1, -1}) {
    for (unsigned long q = 1; q < h; ++q) {
      if (std::gcd(q, h) != 1) continue;
      block_.emplace_back(sign * static_cast<long>(h), q);
    }
  }
}

std::optional<Rational> RationalEnumerator::next() {
  while (pos_ == block_.size()) {
    if (height_ >= bound_) return std::nullopt;
    fill_block();
  }
  return block_[pos_++];
}

std::vector<Rational> enumerate_rationals(std::uint64_t bound) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(count_rationals(bound)));
  RationalEnumerator e(bound);
  while (auto q = e.next()) out.push_back(std::move(*q));
  return out;
}

std::uint64_t count_rationals(std::uint64_t bound) {
  if (bound == 0) return 0;
  std::vector<std::uint64_t> phi(bound + 1);
  std::iota(phi.begin(), phi.end(), std::uint64_t{0});
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (phi[p] != p) continue;
    for (std::uint64_t k = p; k <= bound; k += p) phi[k] -= phi[k] / p;
  }
  std::uint64_t total = 3;
  for (std::uint64_t h = 2; h <= bound; ++h) total += 4 * phi[h];
  return total;
}

bool segre_scan_certified(const WeierstrassFamily& fam, const BigInt& bound, std::uint64_t search_bound,
                          std::optional<double> lower_height_constant) {
  if (!lower_height_constant) return false;
  if (*lower_height_constant <= 0) {
    throw Error(ErrorKind::kInvalidInput, "lower height constant must be positive");
  }
  const double lhs = std::log(*lower_height_constant) +
                     fam.j().map_degree() * std::log(static_cast<double>(search_bound) + 1.0);
  return lhs > log_abs(bound);
}

SegreScan enumerate_by_segre_height(const WeierstrassFamily& fam, const BigInt& bound,
                                    std::uint64_t search_bound,
                                    std::optional<double> lower_height_constant) {
  if (bound < 1) throw Error(ErrorKind::kInvalidInput, "height bound must be at least 1");
  SegreScan scan;
  scan.search_bound = search_bound;
  scan.certified = segre_scan_certified(fam, bound, search_bound, lower_height_constant);
  RationalEnumerator e(search_bound);
  while (auto t = e.next()) {
    ++scan.scanned;
    FiberPair pair = specialize(fam, *t);
    if (!pair.smooth()) {
      ++scan.singular;
      continue;
    }
    BigInt h = height_rational(pair.first->j) * height_rational(pair.second->j);
    if (h <= bound) scan.entries.push_back({*t, h});
  }
  return scan;
}

}  // namespace isofiber
