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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "isofiber/family.hpp"
#include "isofiber/rational.hpp"

namespace isofiber {

// Canonical order on rationals: height, then |p| ascending, then positive
// before negative, then q ascending.
bool canonical_less(const Rational& a, const Rational& b);

// Streams { p/q reduced : max(|p|, q) <= B } in canonical order, one
// height block at a time.
class RationalEnumerator {
 public:
  explicit RationalEnumerator(std::uint64_t bound);

  std::optional<Rational> next();

 private:
  void fill_block();

  std::uint64_t bound_;
  std::uint64_t height_ = 0;
  std::vector<Rational> block_;
  std::size_t pos_ = 0;
};

std::vector<Rational> enumerate_rationals(std::uint64_t bound);

// Same count without materializing: 3 + 4 * sum_{h=2}^{B} phi(h), 0 for B = 0.
std::uint64_t count_rationals(std::uint64_t bound);

struct SegreScanEntry {
  Rational t;
  BigInt fiber_height;  // H(P_t)
};

struct SegreScan {
  std::vector<SegreScanEntry> entries;  // canonical order of t
  std::uint64_t search_bound = 0;
  std::uint64_t scanned = 0;
  std::uint64_t singular = 0;
  // True only when a caller-supplied constant C with
  // C * H(t)^{deg j} <= H(j(t)) proves that no t beyond the search bound
  // can satisfy H(P_t) <= B.
  bool certified = false;
};

// Scans H(t) <= search_bound and keeps smooth fibers with H(P_t) <= B.
SegreScan enumerate_by_segre_height(const WeierstrassFamily& fam, const BigInt& bound,
                                    std::uint64_t search_bound,
                                    std::optional<double> lower_height_constant = std::nullopt);

// Certification predicate used by the scan: log C + deg(j) log(S + 1) > log B.
bool segre_scan_certified(const WeierstrassFamily& fam, const BigInt& bound, std::uint64_t search_bound,
                          std::optional<double> lower_height_constant);

}  // namespace isofiber
