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

#include "wft/kinematics.hpp"

#include <Eigen/Geometry>
#include <cmath>
#include <limits>

#include "wft/errors.hpp"

namespace wft {

namespace {

// sqrt(1 - beta^2) without cancellation near |beta| = 1.
double sqrt_one_minus_beta_sq(double beta) {
  return std::sqrt((1.0 - beta) * (1.0 + beta));
}

}  // namespace

double doppler_wavelength(double lambda_emit, double beta, double phi) {
  if (!(lambda_emit > 0.0)) throw domain_error("doppler_wavelength: lambda must be positive");
  if (!(std::abs(beta) < 1.0)) throw domain_error("doppler_wavelength: |beta| must be < 1");
  const double denom = 1.0 + beta * std::cos(phi);
  if (!(denom > 0.0)) throw domain_error("doppler_wavelength: unphysical 1 + beta cos(phi) <= 0");
  return lambda_emit * sqrt_one_minus_beta_sq(beta) / denom;
}

double rsp_push_velocity(double lambda_i, double lambda0) {
  if (!(lambda_i > 0.0) || !(lambda0 > 0.0)) {
    throw domain_error("rsp_push_velocity: wavelengths must be positive");
  }
  return lambda0 / std::hypot(2.0 * lambda_i, lambda0);
}

double wave_momentum(double m0, double beta, const Constants& k) {
  if (!(m0 > 0.0)) throw domain_error("wave_momentum: mass must be positive");
  if (!(std::abs(beta) < 1.0)) throw domain_error("wave_momentum: |beta| must be < 1");
  return m0 * k.c * beta / sqrt_one_minus_beta_sq(beta);
}

double de_broglie_wavelength(double lambda0, double beta) {
  if (!(lambda0 > 0.0)) throw domain_error("de_broglie_wavelength: lambda0 must be positive");
  if (!(std::abs(beta) < 1.0)) throw domain_error("de_broglie_wavelength: |beta| must be < 1");
  if (beta == 0.0) return std::numeric_limits<double>::infinity();
  return lambda0 * sqrt_one_minus_beta_sq(beta) / std::abs(beta);
}

EnergyPair energy_pair(double lambda0, double beta, const Constants& k) {
  if (!(beta >= 0.0 && beta < 1.0)) throw domain_error("energy_pair: beta must be in [0, 1)");
  const double hc = k.h * k.c;
  const double E1 = hc / doppler_wavelength(lambda0, beta, 0.0);
  const double E2 = hc / doppler_wavelength(lambda0, beta, M_PI);
  const double inv_gamma = sqrt_one_minus_beta_sq(beta);
  const double E0 = hc / lambda0;
  return EnergyPair{E1, E2, E0 * beta / inv_gamma, E0 / inv_gamma};
}

std::vector<Eigen::Vector3d> lorentz_force_residual(double q, const Eigen::Vector3d& E_field,
                                                    const Eigen::Vector3d& B_field,
                                                    std::span<const TrajectorySample> trajectory,
                                                    double m0, const Constants& k) {
  if (trajectory.size() < 3) {
    throw domain_error("lorentz_force_residual: need at least 3 samples");
  }
  const double dt = trajectory[1].t - trajectory[0].t;
  if (!(dt > 0.0)) throw domain_error("lorentz_force_residual: non-increasing time samples");
  for (std::size_t i = 0; i + 1 < trajectory.size(); ++i) {
    const double step = trajectory[i + 1].t - trajectory[i].t;
    if (std::abs(step - dt) > 1e-9 * dt) {
      throw domain_error("lorentz_force_residual: trajectory must be uniformly sampled");
    }
  }

  // momentum at each sample; rejects superluminal velocities on the way
  std::vector<Eigen::Vector3d> p(trajectory.size());
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const double speed = trajectory[i].v.norm();
    if (!(speed < k.c)) throw domain_error("lorentz_force_residual: superluminal sample");
    const double beta = speed / k.c;
    const double gamma = 1.0 / sqrt_one_minus_beta_sq(beta);
    p[i] = m0 * gamma * trajectory[i].v;
  }

  std::vector<Eigen::Vector3d> residual;
  residual.reserve(trajectory.size() - 2);
  for (std::size_t i = 1; i + 1 < trajectory.size(); ++i) {
    const Eigen::Vector3d dpdt = (p[i + 1] - p[i - 1]) / (2.0 * dt);
    const Eigen::Vector3d force = q * (E_field + trajectory[i].v.cross(B_field));
    residual.push_back(force - dpdt);
  }
  return residual;
}

}  // namespace wft
