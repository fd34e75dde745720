// Copyright 2026 The wft-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wft/lattice.hpp"

#include <cmath>

#include "wft/errors.hpp"

namespace wft {

namespace {

// Integer square root with floor semantics, exact for the small magnitudes
// handled here (t <= 1e4 gives arguments <= 3e8).
std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

LatticeVector make_lattice_vector(std::int64_t t, std::int64_t x, std::int64_t y,
                                  std::int64_t z) {
  if (t < 1) throw domain_error("lattice vector: t must be >= 1");
  if (t * t - x * x - y * y - z * z != 1) {
    throw domain_error("lattice vector: t^2 - x^2 - y^2 - z^2 must equal 1");
  }
  return LatticeVector{t, x, y, z};
}

std::vector<LatticeVector> enumerate_vectors(std::int64_t t_max) {
  if (t_max < 1 || t_max > 10000) {
    throw domain_error("enumerate_vectors: t_max must be in [1, 10^4]");
  }
  std::vector<LatticeVector> out;
  for (std::int64_t t = 1; t <= t_max; ++t) {
    const std::int64_t n = t * t - 1;
    const std::int64_t rx = isqrt(n);
    for (std::int64_t x = -rx; x <= rx; ++x) {
      const std::int64_t nx = n - x * x;
      const std::int64_t ry = isqrt(nx);
      for (std::int64_t y = -ry; y <= ry; ++y) {
        const std::int64_t z2 = nx - y * y;
        const std::int64_t z = isqrt(z2);
        if (z * z != z2) continue;
        if (z == 0) {
          out.push_back(LatticeVector{t, x, y, 0});
        } else {
          out.push_back(LatticeVector{t, x, y, -z});
          out.push_back(LatticeVector{t, x, y, z});
        }
      }
    }
  }
  return out;
}

double perturbation_speed(const LatticeVector& v) {
  const std::int64_t s = v.x * v.x + v.y * v.y + v.z * v.z;
  return std::sqrt(static_cast<double>(s)) / static_cast<double>(v.t);
}

SchildBound schild_bound_check(std::int64_t x, std::int64_t y, std::int64_t z) {
  if (x < 0 || y < 0 || z < 0) {
    throw domain_error("schild_bound_check: spatial components must be non-negative");
  }
  const std::int64_t s = x * x + y * y + z * z;
  if (s == 0) throw domain_error("schild_bound_check: spatial part must not be all zero");
  const std::int64_t sum = x + y + z;
  const std::int64_t sum2 = sum * sum;
  SchildBound b{};
  b.within = (s <= sum2) && (sum2 <= 3 * s);
  b.left_strict = s < sum2;
  b.right_strict = sum2 < 3 * s;
  return b;
}

SchildBound schild_bound_check(const LatticeVector& v) {
  return schild_bound_check(v.x, v.y, v.z);
}

}  // namespace wft
