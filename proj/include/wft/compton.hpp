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

namespace wft {

/// Staged record of the two-push wave Compton pipeline. Each push redshifts
/// the chasing photon (phi = pi convention), so lambda_i < lambda_i1 <
/// lambda_i2 and 0 < v1, v2 < 1 for all positive inputs.
struct ComptonTrace {
  double lambda_i;          ///< incident wavelength, m
  double lambda0;           ///< particle rest wavelength, m
  double alpha;             ///< deflection angle, rad
  double v1;                ///< first push fraction
  double lambda_i1;         ///< after first decay, m
  double r;                 ///< diffraction radius lambda_i1 / alpha, m
  double lambda_e1;         ///< transverse particle wavelength, m
  double v2;                ///< second push fraction
  double lambda_i2;         ///< final wavelength, m
  double dlambda_paper;     ///< lambda_i2 - lambda_i1 (second decay only), m
  double dlambda_total;     ///< lambda_i2 - lambda_i, m
  double dlambda_oracle;    ///< standard Compton shift (h / m0 c)(1 - cos alpha), m
  double rel_dev_paper;     ///< (dlambda_paper - dlambda_oracle) / dlambda_oracle
  double rel_dev_total;     ///< (dlambda_total - dlambda_oracle) / dlambda_oracle
  double lambda_undecayed;  ///< deflected-only component, keeps lambda_i
};

/// First push: lambda0 / sqrt(4 lambda_i^2 + lambda0^2). Same closed form as
/// rsp_push_velocity, re-exported under the pipeline's stage name.
double stage1_velocity(double lambda_i, double lambda0);

/// First Doppler decay, photon chasing the receding particle (phi = pi):
/// lambda_i sqrt(1 - v1^2) / (1 - v1).
double stage1_decay(double lambda_i, double v1);

/// Least approach radius of the diffracted photon: lambda_i1 / alpha.
double diffraction_radius(double lambda_i1, double alpha);

/// The printed maximum-deviation expression
///   2 lambda_i^2 / (2 sqrt(4 lambda_i^2 + lambda0^2))
///     * 1 / (1 - lambda0 cos(phi) / sqrt(4 lambda_i^2 + lambda0^2)).
/// Evaluated literally; the value carries length dimension as printed and is
/// reported as-is.
double max_deflection(double lambda_i, double lambda0, double phi);

/// Transverse wavelength of the pushed particle: lambda_e sqrt(1 - v1^2).
double transverse_wavelength(double lambda_e, double v1);

/// Second push: lambda_e1 / sqrt(4 lambda_i1^2 + lambda_e1^2).
double stage2_velocity(double lambda_i1, double lambda_e1);

/// Second Doppler decay, same phi = pi convention as stage 1.
double stage2_decay(double lambda_i1, double v2);

/// Runs the four stages in order and fills the full trace, including the
/// standard-Compton oracle shift lambda0 (1 - cos alpha) and both relative
/// deviations.
ComptonTrace run_pipeline(double lambda_i, double lambda0, double alpha);

}  // namespace wft
