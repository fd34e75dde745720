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

#include <string>

#include "wft/constants.hpp"

namespace wft {

/// Two spherical bodies with their derived rest wavelengths h/(m c).
struct MassPair {
  double m_a;       ///< kg
  double m_b;       ///< kg
  double r;         ///< separation, m
  double lambda_a;  ///< m
  double lambda_b;  ///< m

  static MassPair make(double m_a, double m_b, double r,
                       const Constants& k = default_constants());
};

/// Characteristic period of the elementary wave action: lambda1 / (4 c), s.
double characteristic_period(double lambda1, const Constants& k = default_constants());

/// First impulse F_g * t_g from rest initial conditions, kg m/s.
double first_impulse(double F_g, double t_g);

/// Distance-free force component 4 h c / (lambda_a lambda_b). The printed
/// form carries a frequency symbol with no independent home; it is read as
/// the wave speed and bound to c.
double base_force_component(double lambda_a, double lambda_b,
                            const Constants& k = default_constants());

/// Speed of the parallel wavefronts outside the pair: N L^2 c / (r^2 sqrt 5),
/// m/s, with N the effective wavefront number (a pure count).
double parallel_wavefront_speed(double N, double r, const Constants& k = default_constants());

/// Wave-gravity evaluation with the Newtonian cross-check.
struct GravityReport {
  double m_a;
  double m_b;
  double r;
  double lambda_a;
  double lambda_b;
  double t_g_a;            ///< characteristic period of body a's waves, s
  double t_g_b;            ///< characteristic period of body b's waves, s
  double N;                ///< effective wavefront number N_coeff / L
  double base_component;   ///< 4 h c / (lambda_a lambda_b)
  double force;            ///< (4 h L^2 c / sqrt 5) N / (r^2 lambda_a lambda_b), N
  double newton;           ///< G m_a m_b / r^2, N
  double ratio;            ///< force / newton, (m, r)-independent
  double rel_deviation;    ///< (force - newton) / newton
};

GravityReport wave_gravity_force(const MassPair& pair,
                                 const Constants& k = default_constants());

/// Factorisation check of the calibrated wavefront coefficient against
/// alpha_inv^2 * 100^5. The two printed values disagree by about 0.011%;
/// the report surfaces that difference instead of hiding it.
struct NDecomposition {
  double n_coeff;            ///< configured coefficient of N = N_coeff / L
  double alpha_inv;          ///< configured inverse fine-structure constant
  double reconstruction;     ///< alpha_inv^2 * 100^5
  double rel_difference;     ///< (n_coeff - reconstruction) / n_coeff
  double implied_alpha_inv;  ///< sqrt(n_coeff / 100^5)
};

NDecomposition decompose_N(const Constants& k = default_constants());

/// Terminal-velocity outcome for a rest wavelength, solved from
/// lambda0 sqrt((1-beta)/(1+beta)) = L. The deficit 1 - beta is computed
/// directly as 2 L^2 / (lambda0^2 + L^2), never as 1 minus a near-1 number,
/// and carried alongside its log10 to survive extreme magnitudes.
struct TerminalReport {
  double lambda0;                     ///< m
  double beta_deficit;                ///< 1 - beta, in [0, 1]
  double log10_beta_deficit;          ///< log10(1 - beta)
  std::string v_terminal_description; ///< derived human-readable summary
};

/// Throws wft::domain_error when lambda0 < L (mass would exceed the maximass).
TerminalReport terminal_report(double lambda0, const Constants& k = default_constants());

/// Mass whose rest wavelength equals the terminal length: h / (L c), kg.
double maximass(const Constants& k = default_constants());

/// Attraction/repulsion split of the corrected force law. The sqrt(5 r)
/// prefactor is evaluated literally as printed even though it breaks the
/// inverse-square scaling of the base law; `note` records the tension.
struct FifthForceReport {
  double lambda_a;
  double lambda_b;
  double r;
  double phi;         ///< angle of view, rad (a free input)
  double attraction;  ///< prefactor / (r lambda_a lambda_b)
  double repulsion;   ///< prefactor cos(phi) / (r lambda_a lambda_b sqrt(1 - L^2/(lambda_a lambda_b)))
  double total;       ///< attraction - repulsion
  std::string note;
};

/// Throws wft::domain_error when lambda_a * lambda_b <= L^2 (the repulsive
/// term is singular there).
FifthForceReport fifth_interaction_force(double lambda_a, double lambda_b, double r, double phi,
                                         const Constants& k = default_constants());

/// Direction-dependent wave mass m (1 - beta cos phi) / sqrt(1 - beta^2), kg.
double angular_wave_mass(double m, double beta, double phi);

}  // namespace wft
