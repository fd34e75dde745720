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

#include "wft/constants.hpp"

namespace wft {

/// Stationary plane-wave description of a source along its motion axis.
/// omega0 = c K0 holds exactly by construction.
struct WaveField {
  double lambda0;  ///< rest wavelength, m
  double beta;     ///< source speed fraction, |beta| < 1
  double K0;       ///< rest wave number 2 pi / lambda0, rad/m
  double omega0;   ///< rest angular frequency c K0, rad/s

  WaveField(double lambda0, double beta, const Constants& k = default_constants());
};

/// cos(K0 x) cos(omega0 t); same code path as boosted_field with beta = 0.
double rest_field(const WaveField& f, double x, double t);

/// cos(K x - beta omega t) cos(omega t - beta K x) with omega = gamma omega0,
/// K = gamma K0. The second factor is the phase wave, superluminal at c/beta;
/// the first factor travels at beta c.
double boosted_field(const WaveField& f, double x, double t);

/// Uniform space-time evaluation window. Spatial step h; the temporal step
/// is h/c so both axes resolve the wave equally.
struct ResidualGrid {
  double x_min;
  double x_max;
  double t_min;
  double t_max;
  double h;  ///< spatial step, m
};

/// Max |(1/c^2)(dS/dt)^2 - (dS/dx)^2 - k0^2| over the grid for the phase
/// S = omega t - beta K x, derivatives by central differences, k0 = omega0/c.
/// The phase is affine, so the residual is round-off only. Throws
/// wft::domain_error if the grid is degenerate or spans < 3 wavelengths.
double hamilton_jacobi_residual(const WaveField& f, const ResidualGrid& grid,
                                const Constants& k = default_constants());

struct KleinGordonReport {
  double residual_h;       ///< max residual at step h
  double residual_half_h;  ///< max residual at step h/2
  double order;            ///< log2(residual_h / residual_half_h), ~2
};

/// Residual of -d2/dx2 + (1/c^2) d2/dt2 + k0^2 applied by second-order
/// central differences to psi = cos(sign * omega t - beta K x).
/// frequency_sign -1 selects the negative-frequency branch.
KleinGordonReport klein_gordon_residual(const WaveField& f, const ResidualGrid& grid,
                                        int frequency_sign = +1,
                                        const Constants& k = default_constants());

}  // namespace wft
