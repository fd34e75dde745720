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

#include "wft/compton.hpp"

#include <cmath>

#include "wft/errors.hpp"
#include "wft/kinematics.hpp"

namespace wft {

double stage1_velocity(double lambda_i, double lambda0) {
  return rsp_push_velocity(lambda_i, lambda0);
}

double stage1_decay(double lambda_i, double v1) {
  if (!(lambda_i > 0.0)) throw domain_error("stage1_decay: lambda_i must be positive");
  if (!(std::abs(v1) < 1.0)) throw domain_error("stage1_decay: |v1| must be < 1");
  return lambda_i * std::sqrt((1.0 - v1) * (1.0 + v1)) / (1.0 - v1);
}

double diffraction_radius(double lambda_i1, double alpha) {
  if (!(lambda_i1 > 0.0)) throw domain_error("diffraction_radius: lambda_i1 must be positive");
  if (!(alpha > 0.0)) throw domain_error("diffraction_radius: alpha must be positive");
  return lambda_i1 / alpha;
}

double max_deflection(double lambda_i, double lambda0, double phi) {
  if (!(lambda_i > 0.0) || !(lambda0 > 0.0)) {
    throw domain_error("max_deflection: wavelengths must be positive");
  }
  const double root = std::hypot(2.0 * lambda_i, lambda0);
  const double denom = 1.0 - lambda0 * std::cos(phi) / root;
  if (!(denom > 0.0)) throw domain_error("max_deflection: non-positive denominator");
  return 2.0 * lambda_i * lambda_i / (2.0 * root) / denom;
}

double transverse_wavelength(double lambda_e, double v1) {
  if (!(lambda_e > 0.0)) throw domain_error("transverse_wavelength: lambda_e must be positive");
  if (!(std::abs(v1) < 1.0)) throw domain_error("transverse_wavelength: |v1| must be < 1");
  return lambda_e * std::sqrt((1.0 - v1) * (1.0 + v1));
}

double stage2_velocity(double lambda_i1, double lambda_e1) {
  return rsp_push_velocity(lambda_i1, lambda_e1);
}

double stage2_decay(double lambda_i1, double v2) { return stage1_decay(lambda_i1, v2); }

ComptonTrace run_pipeline(double lambda_i, double lambda0, double alpha) {
  if (!(lambda_i > 0.0) || !(lambda0 > 0.0)) {
    throw domain_error("run_pipeline: wavelengths must be positive");
  }
  ComptonTrace trace{};
  trace.lambda_i = lambda_i;
  trace.lambda0 = lambda0;
  trace.alpha = alpha;
  trace.v1 = stage1_velocity(lambda_i, lambda0);
  trace.lambda_i1 = stage1_decay(lambda_i, trace.v1);
  trace.r = diffraction_radius(trace.lambda_i1, alpha);
  trace.lambda_e1 = transverse_wavelength(lambda0, trace.v1);
  trace.v2 = stage2_velocity(trace.lambda_i1, trace.lambda_e1);
  trace.lambda_i2 = stage2_decay(trace.lambda_i1, trace.v2);
  trace.dlambda_paper = trace.lambda_i2 - trace.lambda_i1;
  trace.dlambda_total = trace.lambda_i2 - trace.lambda_i;
  trace.dlambda_oracle = lambda0 * (1.0 - std::cos(alpha));
  trace.rel_dev_paper = (trace.dlambda_paper - trace.dlambda_oracle) / trace.dlambda_oracle;
  trace.rel_dev_total = (trace.dlambda_total - trace.dlambda_oracle) / trace.dlambda_oracle;
  trace.lambda_undecayed = lambda_i;
  return trace;
}

}  // namespace wft
