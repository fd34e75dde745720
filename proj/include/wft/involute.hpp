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
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wft/constants.hpp"

namespace wft {

/// Parametric description of a plane/spherical involute and its sampling.
///
/// The curve parameter is theta = omega + 2 k pi; plane curves are emitted
/// piecewise for k = 0..k_max with omega in [0, omega_max]. k_max + 1 is the
/// turn count. chirality -1 mirrors the curve (y -> -y, and z -> -z for
/// surfaces). beta and phi_motion describe the translation of the source for
/// Doppler-deformed curves: speed fraction and motion direction in the orbit
/// plane.
struct InvoluteSpec {
  double r0;           ///< resonance radius, m (> 0)
  double omega_max;    ///< parameter bound per turn piece, rad
  int k_max = 0;       ///< extra full turns (non-negative)
  double mu = 0.0;     ///< helix angle, |mu| <= pi/4
  int chirality = 1;   ///< +1 or -1
  double beta = 0.0;   ///< source speed fraction, |beta| < 1
  double phi_motion = 0.0;     ///< motion direction angle in the orbit plane, rad
  int samples_per_turn = 256;  ///< sampling density (>= 1)
};

/// Throws wft::domain_error when a field violates its bounds.
void validate(const InvoluteSpec& spec);

/// Radius of the self-sustaining circular orbit: n lambda0 / (2 pi), n >= 1.
double resonance_radius(double lambda0, int n);

/// Plane involute x = r0 [(w+2kpi) sin w + cos w],
/// y = chirality r0 [sin w - (w+2kpi) cos w], sampled piecewise over
/// omega in [0, omega_max] for k = 0..k_max.
std::vector<Eigen::Vector2d> plane_involute(const InvoluteSpec& spec);

/// Parameter values theta = omega + 2 k pi in the exact order plane_involute
/// and doppler_deformed_involute emit their points.
std::vector<double> involute_parameters(const InvoluteSpec& spec);

/// Parameter values omega1 in the order helicoid emits its points.
std::vector<double> helicoid_parameters(const InvoluteSpec& spec);

/// Complex amplitude in polar form.
struct PhasorAmplitude {
  double magnitude;
  double phase;  ///< rad; stored unwrapped, the value is 2 pi periodic in k
};

/// Rotating amplitude vector (r0 omega1) e^{i(omega1 + 2 k pi)}.
PhasorAmplitude involute_vector(double omega1, int k, double r0);

/// Helicoid geodesic x = r0 cos w1, y = r0 sin w1, z = sign r0 w1 tan(mu),
/// sign selects the +z or -z family; |mu| <= pi/4.
std::vector<Eigen::Vector3d> helicoid(const InvoluteSpec& spec, int sign);

/// Helicoid amplitude modulus r0 omega1 / cos(mu), |mu| < pi/2.
double helicoid_modulus(double r0, double omega1, double mu);

/// Full spherical-involute amplitude:
/// [(r0 omega1) e^{i(omega1+2kpi)} / cos mu] * sqrt(1-beta^2)/(1+beta cos phi),
/// with r0 standing for lambda0 / (2 pi).
PhasorAmplitude spherical_involute_amplitude(const InvoluteSpec& spec, double omega1, int k,
                                             double phi);

/// Triangulated involute surface. Vertex coordinates are in units of r0;
/// `scale` carries r0 in metres (recorded in OBJ exports as a comment).
struct Mesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<std::int32_t, 3>> triangles;
  double scale;  ///< r0, m
};

/// Sweeps the two mirrored helicoid families over mu in [-pi/4, pi/4]
/// (mu_steps uniform rows, the middle row being the plane involute for odd
/// counts) and strip-triangulates adjacent rows. Columns sample
/// theta = 2 pi (j+1) / samples_per_turn for j = 0..samples*turns-1; the
/// cone apex theta = 0, where all rows coincide, is excluded so no triangle
/// is degenerate. Vertex count = samples_per_turn * turns * mu_steps with
/// turns = k_max + 1; triangle count = 2 (mu_steps-1)(columns-1).
/// Requires samples_per_turn >= 8 and mu_steps >= 2; throws
/// wft::resource_error beyond 10^7 vertices.
Mesh build_mesh(const InvoluteSpec& spec, int mu_steps);

/// ASCII OBJ export: `v x y z` then 1-based `f i j k`, coordinates in units
/// of r0, the scale recorded in a leading comment. Deterministic bytes for a
/// given mesh.
std::string to_obj(const Mesh& mesh);

/// Mirror pair of involute specs modelling wave-pair creation.
struct InvolutePair {
  InvoluteSpec plus;            ///< chirality +1
  InvoluteSpec minus;           ///< chirality -1
  bool creation_condition_met;  ///< lambda_i = lambda0 / 2 within 1e-12 relative
};

/// Two specs identical except chirality, r0 = resonance_radius(lambda0, 1).
/// creation_condition_met is false (a warning to surface) when lambda_i
/// deviates from lambda0/2.
InvolutePair pair_create(double lambda_i, double lambda0);

/// Arc-length-weighted centroid of a polyline, for the eccentricity measure.
Eigen::Vector2d arc_centroid(const std::vector<Eigen::Vector2d>& polyline);

/// Offset between the orbit centre (origin) and the centroid of the plane
/// involute arc over [omega_window_start, omega_window_start + 2 pi].
/// Approaches 2 r0 for windows far from the curve start and stays
/// window-independent to < 0.5% beyond 20 rad. Requires the window inside
/// the spec's sampled range and samples_per_turn >= 8.
double eccentricity(const InvoluteSpec& spec, double omega_window_start);

/// Plane involute whose unwrap length is scaled pointwise by the Doppler
/// factor sqrt(1-beta^2)/(1+beta cos phi), phi measured between the orbit
/// tangent at the emission point and the motion direction phi_motion.
/// beta = 0 reproduces plane_involute exactly.
std::vector<Eigen::Vector2d> doppler_deformed_involute(const InvoluteSpec& spec);

}  // namespace wft
