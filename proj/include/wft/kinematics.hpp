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
#include <span>
#include <vector>

#include "wft/constants.hpp"

namespace wft {

/// Wavelength emitted by a moving source as seen by an observer.
struct DopplerObservation {
  double lambda_emit;  ///< wavelength in the source frame, m
  double beta;         ///< source speed fraction v/c
  double phi;          ///< angle between line of sight and velocity, rad
};

/// Observed wavelength lambda_emit * sqrt(1-beta^2) / (1 + beta cos phi).
/// phi = 0 looks along the motion (blueshift), phi = pi against it.
double doppler_wavelength(double lambda_emit, double beta, double phi);

inline double doppler_wavelength(const DopplerObservation& o) {
  return doppler_wavelength(o.lambda_emit, o.beta, o.phi);
}

/// Push velocity of the symmetry-restoring momentum law, as a fraction of c:
/// lambda0 / sqrt(4 lambda_i^2 + lambda0^2). Strictly inside (0, 1).
double rsp_push_velocity(double lambda_i, double lambda0);

/// Relativistic momentum m0 c beta / sqrt(1-beta^2), kg m/s.
double wave_momentum(double m0, double beta, const Constants& k = default_constants());

/// De Broglie wavelength lambda0 sqrt(1-beta^2) / |beta|. beta = 0 has no
/// finite wavelength and yields +infinity (the unbounded outcome).
double de_broglie_wavelength(double lambda0, double beta);

/// Forward/backward wave energies of a moving source and their split.
/// E1 >= E2 >= 0 for beta >= 0; dE = (E1-E2)/2 and Em = (E1+E2)/2 are
/// computed through their algebraically equivalent stable forms
/// E0 beta gamma and E0 gamma.
struct EnergyPair {
  double E1;  ///< energy seen ahead of the motion, J
  double E2;  ///< energy seen behind the motion, J
  double dE;  ///< (E1 - E2)/2 = c p, J
  double Em;  ///< (E1 + E2)/2 = m0 c^2 gamma, J
};

EnergyPair energy_pair(double lambda0, double beta, const Constants& k = default_constants());

/// One sample of a velocity trajectory.
struct TrajectorySample {
  double t;           ///< s
  Eigen::Vector3d v;  ///< m/s, |v| < c
};

/// q(E + v x B) - d/dt[m0 gamma v] at the interior samples of a uniformly
/// sampled trajectory, the derivative by central differences. Requires at
/// least 3 samples; throws wft::domain_error on superluminal samples or
/// non-uniform spacing.
std::vector<Eigen::Vector3d> lorentz_force_residual(
    double q, const Eigen::Vector3d& E_field, const Eigen::Vector3d& B_field,
    std::span<const TrajectorySample> trajectory, double m0,
    const Constants& k = default_constants());

}  // namespace wft
