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

#pragma once

#include <cstdint>
#include <vector>

namespace wft {

/// Primitive integral vector of the discrete space-time lattice:
/// t^2 - x^2 - y^2 - z^2 = 1 with t >= 1, checked exactly in integers.
struct LatticeVector {
  std::int64_t t;
  std::int64_t x;
  std::int64_t y;
  std::int64_t z;

  bool operator==(const LatticeVector&) const = default;
};

/// Validating constructor; throws wft::domain_error when the Diophantine
/// constraint or t >= 1 fails.
LatticeVector make_lattice_vector(std::int64_t t, std::int64_t x, std::int64_t y,
                                  std::int64_t z);

/// Every admissible vector with 1 <= t <= t_max, in lexicographic
/// (t, x, y, z) order. Exhaustive over the spatial ball |x|,|y|,|z| <= t.
/// Domain of t_max is [1, 10^4].
std::vector<LatticeVector> enumerate_vectors(std::int64_t t_max);

/// Admissible perturbation speed sqrt(x^2+y^2+z^2)/t as a fraction of c;
/// equals sqrt(t^2-1)/t by the lattice constraint.
double perturbation_speed(const LatticeVector& v);

/// Result of the double bound sqrt(s) <= x+y+z <= sqrt(3 s), s = x^2+y^2+z^2,
/// evaluated exactly in integer arithmetic. The left bound degenerates to
/// equality exactly when at most one spatial component is nonzero, so its
/// strictness is reported separately instead of folded into `within`.
struct SchildBound {
  bool within;        ///< both bounds hold (non-strict)
  bool left_strict;   ///< sqrt(s) <  x+y+z
  bool right_strict;  ///< x+y+z  < sqrt(3 s)
};

/// Requires x, y, z >= 0 and not all zero; throws wft::domain_error otherwise.
/// The triple form exists because the bound constrains spatial components
/// alone, including ones (like 2,0,0) that embed in no admissible vector.
SchildBound schild_bound_check(std::int64_t x, std::int64_t y, std::int64_t z);
SchildBound schild_bound_check(const LatticeVector& v);

}  // namespace wft
