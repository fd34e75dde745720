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

#include "wft/core.hpp"

#include <cmath>

#include "wft/errors.hpp"

namespace wft {

double rest_wavelength(double m0, const Constants& k) {
  if (!(m0 > 0.0)) throw domain_error("rest_wavelength: mass must be positive");
  return k.h / (k.c * m0);
}

double mass_from_wavelength(double lambda, const Constants& k) {
  if (!(lambda > 0.0)) throw domain_error("mass_from_wavelength: wavelength must be positive");
  return k.h / (k.c * lambda);
}

namespace {
void check_beta(double beta) {
  if (!(std::abs(beta) < 1.0)) throw domain_error("particle: |beta| must be < 1");
}
}  // namespace

Particle Particle::from_mass(double m0, double beta, const Constants& k) {
  check_beta(beta);
  return Particle{m0, rest_wavelength(m0, k), beta};
}

Particle Particle::from_wavelength(double lambda0, double beta, const Constants& k) {
  check_beta(beta);
  return Particle{mass_from_wavelength(lambda0, k), lambda0, beta};
}

Photon::Photon(double lambda, const Eigen::Vector3d& dir) : lambda_i(lambda), direction(dir) {
  if (!(lambda_i > 0.0)) throw domain_error("photon: wavelength must be positive");
  if (std::abs(direction.norm() - 1.0) > 1e-12) {
    throw domain_error("photon: direction must be a unit vector");
  }
}

}  // namespace wft
