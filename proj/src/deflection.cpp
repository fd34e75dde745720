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

#include "wft/deflection.hpp"

#include "wft/errors.hpp"

namespace wft {

double gr_deflection(double m, double r, const Constants& k) {
  if (!(m > 0.0) || !(r > 0.0)) throw domain_error("gr_deflection: inputs must be positive");
  return 4.0 * k.G * m / (k.c * k.c * r);
}

double wave_deflection(double lambda_mass, double r, const Constants& k) {
  if (!(lambda_mass > 0.0) || !(r > 0.0)) {
    throw domain_error("wave_deflection: inputs must be positive");
  }
  return 4.0 * k.G * k.h / (k.c * k.c * k.c * lambda_mass * r);
}

ExtendedDeflection extended_deflection(double lambda_mass, double lambda_i, double r,
                                       const Constants& k) {
  if (!(lambda_mass > 0.0) || !(r > 0.0) || lambda_i < 0.0) {
    throw domain_error("extended_deflection: lambda_mass, r must be positive and lambda_i >= 0");
  }
  ExtendedDeflection d{};
  d.term1 = wave_deflection(lambda_mass, r, k);
  d.term2 = lambda_i / r;
  d.total = d.term1 + d.term2;
  d.crossover_lambda_i = 4.0 * k.G * k.h / (k.c * k.c * k.c * lambda_mass);
  return d;
}

}  // namespace wft
