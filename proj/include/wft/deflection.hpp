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

/// Classical light-deflection angle 4 G m / (c^2 r), rad.
double gr_deflection(double m, double r, const Constants& k = default_constants());

/// Wave form of the same angle, 4 G h / (c^3 lambda_mass r); identical to
/// gr_deflection when lambda_mass = h/(m c).
double wave_deflection(double lambda_mass, double r, const Constants& k = default_constants());

/// Two-term deflection: the mass term plus the incident-wavelength term.
struct ExtendedDeflection {
  double term1;               ///< 4 G h / (c^3 lambda_mass r)
  double term2;               ///< lambda_i / r
  double total;               ///< term1 + term2
  double crossover_lambda_i;  ///< lambda_i at which term2 = term1 (r-independent)
};

/// lambda_i = 0 degenerates to the pure wave_deflection.
ExtendedDeflection extended_deflection(double lambda_mass, double lambda_i, double r,
                                       const Constants& k = default_constants());

}  // namespace wft
