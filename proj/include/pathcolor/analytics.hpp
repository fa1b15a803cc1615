// Copyright 2026 The pathcolor Authors
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
#include <span>
#include <string_view>
#include <vector>

#include "pathcolor/exact.hpp"

namespace pathcolor {

// counts[d] = number of states (or expected number, for randomized
// protocols) that end with d defects. For a full enumeration the entries sum
// to c^n.
struct DefectDistribution {
  std::vector<Rational> counts;

  std::size_t size() const { return counts.size(); }
  Rational total() const;
  bool integral() const;

  bool operator==(const DefectDistribution&) const = default;
};

// sum_d d * N(d) / sum_d N(d). For a full distribution the denominator is c^n.
Rational average_defects(const DefectDistribution& dist);

// G[i - 1] = number of occurrences of a maximal run of size i, summed over
// all c^n states.
struct GroupCountVector {
  std::vector<BigInt> counts;

  // sum_i i * G_i
  BigInt weighted_sum() const;

  bool operator==(const GroupCountVector&) const = default;
};

// Proper c-colorings of P_n: c (c-1)^(n-1).
BigInt chromatic_polynomial_path(std::int64_t n, std::int64_t c);

// Random assignment: N0(d) = c (c-1)^(n-d-1) C(n-1, d), d in [0, n-1].
DefectDistribution random_defect_distribution(std::int64_t n, std::int64_t c);

// Checks N0(d) = 2 C(n-1, d) for every d with c = 2.
bool pascal_row_property(std::int64_t n);

// Occurrences of each group size across all random assignments; n >= 2.
GroupCountVector group_count_vector(std::int64_t n, std::int64_t c);

// Edge correcting protocol (C,φ): N1(d) = c^3 (c-1)^(n-d-3) C(n-3, d) for
// d <= n - 3, zero above. Rejects n <= 3.
DefectDistribution edge_correcting_distribution(std::int64_t n, std::int64_t c);

// Three published renderings of the center correcting (φ,C), c = 2 closed
// form. They differ only in the upper argument of the last binomial in the
// double sum:
//   kDsMinus2k  C(d_s + i - 2k - 1, i - k - 1)
//   kDs         C(d_s + i - 1,      i - k - 1)
//   kDMinus2k   C(d   + i - 2k - 1, i - k - 1)   generating-function coefficient
// with d_s = d + 2(i - k) and the inner sum running to
// floor((n - 1 - d + 2k) / 2). The trailing pure-g2 term is 2 C(n - d, d).
enum class CenterFormVariant { kDsMinus2k, kDs, kDMinus2k };

std::string_view variant_name(CenterFormVariant v);
std::span<const CenterFormVariant> all_center_variants();

DefectDistribution center_correcting_distribution_c2(std::int64_t n, CenterFormVariant variant);

// Final-defect distribution of (φ,C) from one starting group decomposition
// with c >= 3 colors. A group of size m >= 3 keeps its two ends and re-draws
// its m - 2 interior nodes from the c - 1 other colors, contributing
// N0(.; P_{m-2}, c-1); groups of size 1 or 2 are left alone and contribute a
// point mass at m - 1. The per-group distributions are convolved. The result
// is unnormalized: its total is (c-1)^(number of re-drawing nodes).
DefectDistribution center_correcting_convolution(std::span<const std::size_t> group_sizes, std::int64_t c);

// Full linear convolution of two count vectors.
std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace pathcolor
