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

#include "pathcolor/analytics.hpp"

#include <array>
#include <stdexcept>

#include <fmt/format.h>

namespace pathcolor {

Rational DefectDistribution::total() const {
  Rational sum = 0;
  for (const auto& v : counts) sum += v;
  return sum;
}

bool DefectDistribution::integral() const {
  for (const auto& v : counts) {
    if (boost::multiprecision::denominator(v) != 1) return false;
  }
  return true;
}

Rational average_defects(const DefectDistribution& dist) {
  const Rational total = dist.total();
  if (total == 0) throw std::invalid_argument("average of an empty distribution");
  Rational weighted = 0;
  for (std::size_t d = 0; d < dist.counts.size(); ++d) weighted += dist.counts[d] * d;
  return weighted / total;
}

BigInt GroupCountVector::weighted_sum() const {
  BigInt sum = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) sum += counts[i] * (i + 1);
  return sum;
}

BigInt chromatic_polynomial_path(std::int64_t n, std::int64_t c) {
  if (n < 1 || c < 1) throw std::invalid_argument(fmt::format("need n >= 1 and c >= 1, got n={} c={}", n, c));
  return c * ipow(c - 1, n - 1);
}

DefectDistribution random_defect_distribution(std::int64_t n, std::int64_t c) {
  if (n < 1 || c < 2) throw std::invalid_argument(fmt::format("need n >= 1 and c >= 2, got n={} c={}", n, c));
  DefectDistribution out;
  out.counts.reserve(n);
  for (std::int64_t d = 0; d < n; ++d) {
    out.counts.emplace_back(c * ipow(c - 1, n - d - 1) * binomial(n - 1, d));
  }
  return out;
}

bool pascal_row_property(std::int64_t n) {
  const auto dist = random_defect_distribution(n, 2);
  for (std::int64_t d = 0; d < n; ++d) {
    if (dist.counts[d] != Rational(2 * binomial(n - 1, d))) return false;
  }
  return true;
}

GroupCountVector group_count_vector(std::int64_t n, std::int64_t c) {
  if (n < 2 || c < 2) throw std::invalid_argument(fmt::format("need n >= 2 and c >= 2, got n={} c={}", n, c));
  GroupCountVector out;
  out.counts.resize(n);
  for (std::int64_t i = 1; i <= n; ++i) {
    BigInt g;
    if (i == n) {
      g = c;
    } else if (i == n - 1) {
      g = 2 * c * (c - 1);
    } else {
      g = ipow(c, n - 1 - i) * (c - 1) * ((n - i + 1) * c - (n - i - 1));
    }
    out.counts[i - 1] = g;
  }
  return out;
}

DefectDistribution edge_correcting_distribution(std::int64_t n, std::int64_t c) {
  if (n <= 3) throw std::invalid_argument(fmt::format("edge correcting closed form needs n >= 4, got {}", n));
  if (c < 2) throw std::invalid_argument(fmt::format("need c >= 2, got {}", c));
  DefectDistribution out;
  out.counts.assign(n, 0);
  for (std::int64_t d = 0; d <= n - 3; ++d) {
    out.counts[d] = ipow(c, 3) * ipow(c - 1, n - d - 3) * binomial(n - 3, d);
  }
  return out;
}

std::string_view variant_name(CenterFormVariant v) {
  switch (v) {
    case CenterFormVariant::kDsMinus2k: return "ds-2k";
    case CenterFormVariant::kDs: return "ds";
    case CenterFormVariant::kDMinus2k: return "d-2k";
  }
  return "?";
}

std::span<const CenterFormVariant> all_center_variants() {
  static constexpr std::array kAll{CenterFormVariant::kDsMinus2k, CenterFormVariant::kDs,
                                   CenterFormVariant::kDMinus2k};
  return kAll;
}

DefectDistribution center_correcting_distribution_c2(std::int64_t n, CenterFormVariant variant) {
  if (n < 3) throw std::invalid_argument(fmt::format("center correcting closed form needs n >= 3, got {}", n));
  DefectDistribution out;
  out.counts.assign(n, 0);
  for (std::int64_t d = 0; d < n; ++d) {
    BigInt sum = 0;
    for (std::int64_t k = 0; k <= d; ++k) {
      // floor((n - 1 - d + 2k) / 2); numerator is non-negative since d < n.
      const std::int64_t upper = (n - 1 - d + 2 * k) / 2;
      for (std::int64_t i = k + 1; i <= upper; ++i) {
        const std::int64_t ds = d + 2 * (i - k);
        std::int64_t top = 0;
        switch (variant) {
          case CenterFormVariant::kDsMinus2k: top = ds + i - 2 * k - 1; break;
          case CenterFormVariant::kDs: top = ds + i - 1; break;
          case CenterFormVariant::kDMinus2k: top = d + i - 2 * k - 1; break;
        }
        sum += binomial(n - ds, i) * binomial(i, k) * binomial(top, i - k - 1);
      }
    }
    out.counts[d] = 2 * sum + 2 * binomial(n - d, d);
  }
  return out;
}

std::vector<Rational> convolve(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, 0);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] == 0) continue;
    for (std::size_t y = 0; y < b.size(); ++y) out[x + y] += a[x] * b[y];
  }
  return out;
}

DefectDistribution center_correcting_convolution(std::span<const std::size_t> group_sizes, std::int64_t c) {
  if (c < 3) throw std::invalid_argument(fmt::format("the convolution form needs c >= 3, got {}", c));
  std::size_t n = 0;
  std::vector<Rational> acc{1};
  for (const std::size_t m : group_sizes) {
    if (m == 0) throw std::invalid_argument("group sizes must be positive");
    n += m;
    std::vector<Rational> part;
    if (m <= 2) {
      part.assign(m, 0);
      part[m - 1] = 1;
    } else {
      part = random_defect_distribution(static_cast<std::int64_t>(m) - 2, c - 1).counts;
    }
    acc = convolve(acc, part);
  }
  if (n == 0) throw std::invalid_argument("empty group decomposition");
  acc.resize(n, 0);
  return {std::move(acc)};
}

}  // namespace pathcolor
