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

#include "wft/gravity.hpp"

#include <cmath>
#include <cstdio>

#include "wft/core.hpp"
#include "wft/errors.hpp"

namespace wft {

MassPair MassPair::make(double m_a, double m_b, double r, const Constants& k) {
  if (!(r > 0.0)) throw domain_error("mass pair: separation must be positive");
  return MassPair{m_a, m_b, r, rest_wavelength(m_a, k), rest_wavelength(m_b, k)};
}

double characteristic_period(double lambda1, const Constants& k) {
  if (!(lambda1 > 0.0)) throw domain_error("characteristic_period: lambda must be positive");
  return lambda1 / (4.0 * k.c);
}

double first_impulse(double F_g, double t_g) {
  if (F_g < 0.0 || t_g < 0.0) throw domain_error("first_impulse: inputs must be non-negative");
  return F_g * t_g;
}

double base_force_component(double lambda_a, double lambda_b, const Constants& k) {
  if (!(lambda_a > 0.0) || !(lambda_b > 0.0)) {
    throw domain_error("base_force_component: wavelengths must be positive");
  }
  return 4.0 * k.h * k.c / (lambda_a * lambda_b);
}

double parallel_wavefront_speed(double N, double r, const Constants& k) {
  if (!(N > 0.0) || !(r > 0.0)) {
    throw domain_error("parallel_wavefront_speed: inputs must be positive");
  }
  return N * k.L * k.L * k.c / (r * r * std::sqrt(5.0));
}

GravityReport wave_gravity_force(const MassPair& pair, const Constants& k) {
  if (!(pair.r > 0.0) || !(pair.lambda_a > 0.0) || !(pair.lambda_b > 0.0)) {
    throw domain_error("wave_gravity_force: invalid mass pair");
  }
  GravityReport rep{};
  rep.m_a = pair.m_a;
  rep.m_b = pair.m_b;
  rep.r = pair.r;
  rep.lambda_a = pair.lambda_a;
  rep.lambda_b = pair.lambda_b;
  rep.t_g_a = characteristic_period(pair.lambda_a, k);
  rep.t_g_b = characteristic_period(pair.lambda_b, k);
  rep.N = k.N_coeff / k.L;
  rep.base_component = base_force_component(pair.lambda_a, pair.lambda_b, k);
  // (4 h L^2 c / sqrt5) * (N_coeff / L) == 4 h c N_coeff L / sqrt5, grouped to
  // keep every intermediate in range
  const double prefactor = (4.0 * k.h * k.c) * (k.N_coeff * k.L) / std::sqrt(5.0);
  rep.force = prefactor / (pair.r * pair.r * pair.lambda_a * pair.lambda_b);
  rep.newton = k.G * pair.m_a * pair.m_b / (pair.r * pair.r);
  rep.ratio = rep.force / rep.newton;
  rep.rel_deviation = rep.ratio - 1.0;
  return rep;
}

NDecomposition decompose_N(const Constants& k) {
  NDecomposition d{};
  d.n_coeff = k.N_coeff;
  d.alpha_inv = k.alpha_inv;
  const double pow100_5 = 1e10;
  d.reconstruction = k.alpha_inv * k.alpha_inv * pow100_5;
  d.rel_difference = (d.n_coeff - d.reconstruction) / d.n_coeff;
  d.implied_alpha_inv = std::sqrt(d.n_coeff / pow100_5);
  return d;
}

TerminalReport terminal_report(double lambda0, const Constants& k) {
  if (!(lambda0 > 0.0)) throw domain_error("terminal_report: lambda0 must be positive");
  if (lambda0 < k.L) {
    throw domain_error("terminal_report: lambda0 below the terminal length (mass exceeds maximass)");
  }
  TerminalReport rep{};
  rep.lambda0 = lambda0;
  rep.beta_deficit = 2.0 * k.L * k.L / (lambda0 * lambda0 + k.L * k.L);
  const double q = k.L / lambda0;
  rep.log10_beta_deficit =
      std::log10(2.0) + 2.0 * (std::log10(k.L) - std::log10(lambda0)) - std::log1p(q * q) / std::log(10.0);
  char buf[160];
  if (rep.beta_deficit == 1.0) {
    std::snprintf(buf, sizeof buf, "at rest: wavelength equals the terminal length L");
  } else {
    std::snprintf(buf, sizeof buf, "v/c = 1 - %.6e (log10 deficit %.4f)", rep.beta_deficit,
                  rep.log10_beta_deficit);
  }
  rep.v_terminal_description = buf;
  return rep;
}

double maximass(const Constants& k) { return k.h / (k.L * k.c); }

FifthForceReport fifth_interaction_force(double lambda_a, double lambda_b, double r, double phi,
                                         const Constants& k) {
  if (!(lambda_a > 0.0) || !(lambda_b > 0.0) || !(r > 0.0)) {
    throw domain_error("fifth_interaction_force: lengths must be positive");
  }
  const double wavelength_product = lambda_a * lambda_b;
  const double depletion = 1.0 - k.L * k.L / wavelength_product;
  if (!(depletion > 0.0)) {
    throw domain_error("fifth_interaction_force: lambda_a * lambda_b <= L^2 (singular)");
  }
  FifthForceReport rep{};
  rep.lambda_a = lambda_a;
  rep.lambda_b = lambda_b;
  rep.r = r;
  rep.phi = phi;
  const double N = k.N_coeff / k.L;
  const double prefactor = (4.0 * k.h * k.c) * (k.L * k.L * N) / std::sqrt(5.0 * r);
  rep.attraction = prefactor / (r * wavelength_product);
  rep.repulsion = prefactor * std::cos(phi) / (r * wavelength_product * std::sqrt(depletion));
  rep.total = rep.attraction - rep.repulsion;
  rep.note =
      "sqrt(5 r) prefactor evaluated literally; it breaks the inverse-square "
      "scaling of the base force law";
  return rep;
}

double angular_wave_mass(double m, double beta, double phi) {
  if (!(m > 0.0)) throw domain_error("angular_wave_mass: mass must be positive");
  if (!(std::abs(beta) < 1.0)) throw domain_error("angular_wave_mass: |beta| must be < 1");
  return m * (1.0 - beta * std::cos(phi)) / std::sqrt((1.0 - beta) * (1.0 + beta));
}

}  // namespace wft
