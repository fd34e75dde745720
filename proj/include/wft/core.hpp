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

#include <Eigen/Core>

#include "wft/constants.hpp"

namespace wft {

/// Rest (Compton) wavelength of a mass: h / (c m0). Throws wft::domain_error
/// for non-positive mass.
double rest_wavelength(double m0, const Constants& k = default_constants());

/// Exact inverse of rest_wavelength: h / (c lambda). Throws wft::domain_error
/// for non-positive wavelength.
double mass_from_wavelength(double lambda, const Constants& k = default_constants());

/// A rest mass with its derived rest wavelength and a velocity fraction.
/// lambda0 * m0 * c == h holds to machine round-off by construction.
struct Particle {
  double m0;       ///< rest mass, kg
  double lambda0;  ///< rest wavelength, m
  double beta;     ///< v/c, |beta| < 1

  static Particle from_mass(double m0, double beta,
                            const Constants& k = default_constants());
  static Particle from_wavelength(double lambda0, double beta,
                                  const Constants& k = default_constants());
};

/// Plane wave train of a given wavelength and unit propagation direction.
struct Photon {
  double lambda_i;            ///< wavelength, m (> 0)
  Eigen::Vector3d direction;  ///< unit vector, |direction| = 1 within 1e-12

  Photon(double lambda_i, const Eigen::Vector3d& direction);
};

}  // namespace wft
