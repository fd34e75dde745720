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

#include "wft/involute.hpp"

#include <Eigen/Geometry>
#include <cmath>
#include <cstdio>

#include "wft/errors.hpp"

namespace wft {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

int segments_per_piece(double omega_max, int samples_per_turn) {
  const double fraction = omega_max / kTwoPi;
  return std::max(1, static_cast<int>(std::ceil(samples_per_turn * fraction)));
}

// One involute point; `stretch` scales the unwrap length (1 for the plane
// curve, the local Doppler factor for deformed curves). Chirality is applied
// as a final sign flip so mirrored curves are exact reflections.
Eigen::Vector2d involute_point(double r0, double theta, int chirality, double stretch) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double unwrap = stretch * (r0 * theta);
  const double x = r0 * c + unwrap * s;
  const double y = r0 * s - unwrap * c;
  return {x, static_cast<double>(chirality) * y};
}

double doppler_stretch(const InvoluteSpec& spec, double theta) {
  // angle between the orbit tangent at the emission point and the motion
  // direction; the tangent follows the chirality of the rotation
  const double cos_phi = -std::sin(theta) * std::cos(spec.phi_motion) +
                         static_cast<double>(spec.chirality) * std::cos(theta) *
                             std::sin(spec.phi_motion);
  const double denom = 1.0 + spec.beta * cos_phi;
  if (!(denom > 0.0)) throw domain_error("doppler_deformed_involute: unphysical Doppler factor");
  return std::sqrt((1.0 - spec.beta) * (1.0 + spec.beta)) / denom;
}

template <typename StretchFn>
std::vector<Eigen::Vector2d> sample_involute(const InvoluteSpec& spec, StretchFn&& stretch) {
  std::vector<Eigen::Vector2d> points;
  const int n = segments_per_piece(spec.omega_max, spec.samples_per_turn);
  points.reserve(static_cast<std::size_t>(spec.k_max + 1) * (n + 1));
  for (int k = 0; k <= spec.k_max; ++k) {
    for (int j = 0; j <= n; ++j) {
      const double omega = spec.omega_max * static_cast<double>(j) / static_cast<double>(n);
      const double theta = omega + kTwoPi * static_cast<double>(k);
      points.push_back(involute_point(spec.r0, theta, spec.chirality, stretch(theta)));
    }
  }
  return points;
}

}  // namespace

void validate(const InvoluteSpec& spec) {
  if (!(spec.r0 > 0.0)) throw domain_error("involute spec: r0 must be positive");
  if (!(spec.omega_max > 0.0)) throw domain_error("involute spec: omega_max must be positive");
  if (spec.k_max < 0) throw domain_error("involute spec: k_max must be non-negative");
  if (!(std::abs(spec.mu) <= M_PI / 4.0)) {
    throw domain_error("involute spec: |mu| must be <= pi/4");
  }
  if (spec.chirality != 1 && spec.chirality != -1) {
    throw domain_error("involute spec: chirality must be +1 or -1");
  }
  if (!(std::abs(spec.beta) < 1.0)) throw domain_error("involute spec: |beta| must be < 1");
  if (spec.samples_per_turn < 1) {
    throw domain_error("involute spec: samples_per_turn must be positive");
  }
}

double resonance_radius(double lambda0, int n) {
  if (!(lambda0 > 0.0)) throw domain_error("resonance_radius: lambda0 must be positive");
  if (n < 1) throw domain_error("resonance_radius: n must be >= 1");
  return static_cast<double>(n) * lambda0 / kTwoPi;
}

std::vector<Eigen::Vector2d> plane_involute(const InvoluteSpec& spec) {
  validate(spec);
  return sample_involute(spec, [](double) { return 1.0; });
}

std::vector<double> involute_parameters(const InvoluteSpec& spec) {
  validate(spec);
  std::vector<double> thetas;
  const int n = segments_per_piece(spec.omega_max, spec.samples_per_turn);
  thetas.reserve(static_cast<std::size_t>(spec.k_max + 1) * (n + 1));
  for (int k = 0; k <= spec.k_max; ++k) {
    for (int j = 0; j <= n; ++j) {
      const double omega = spec.omega_max * static_cast<double>(j) / static_cast<double>(n);
      thetas.push_back(omega + kTwoPi * static_cast<double>(k));
    }
  }
  return thetas;
}

std::vector<double> helicoid_parameters(const InvoluteSpec& spec) {
  validate(spec);
  std::vector<double> omegas;
  const int n = segments_per_piece(spec.omega_max, spec.samples_per_turn);
  omegas.reserve(n + 1);
  for (int j = 0; j <= n; ++j) {
    omegas.push_back(spec.omega_max * static_cast<double>(j) / static_cast<double>(n));
  }
  return omegas;
}

PhasorAmplitude involute_vector(double omega1, int k, double r0) {
  if (!(r0 > 0.0)) throw domain_error("involute_vector: r0 must be positive");
  return PhasorAmplitude{r0 * omega1, omega1 + kTwoPi * static_cast<double>(k)};
}

std::vector<Eigen::Vector3d> helicoid(const InvoluteSpec& spec, int sign) {
  validate(spec);
  if (sign != 1 && sign != -1) throw domain_error("helicoid: sign must be +1 or -1");
  const double pitch = static_cast<double>(sign) * spec.r0 * std::tan(spec.mu);
  std::vector<Eigen::Vector3d> points;
  const int n = segments_per_piece(spec.omega_max, spec.samples_per_turn);
  points.reserve(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double w = spec.omega_max * static_cast<double>(j) / static_cast<double>(n);
    points.emplace_back(spec.r0 * std::cos(w), spec.r0 * std::sin(w), pitch * w);
  }
  return points;
}

double helicoid_modulus(double r0, double omega1, double mu) {
  if (!(r0 > 0.0)) throw domain_error("helicoid_modulus: r0 must be positive");
  if (!(std::abs(mu) < M_PI / 2.0)) throw domain_error("helicoid_modulus: |mu| must be < pi/2");
  return r0 * omega1 / std::cos(mu);
}

PhasorAmplitude spherical_involute_amplitude(const InvoluteSpec& spec, double omega1, int k,
                                             double phi) {
  validate(spec);
  const double denom = 1.0 + spec.beta * std::cos(phi);
  if (!(denom > 0.0)) {
    throw domain_error("spherical_involute_amplitude: unphysical Doppler factor");
  }
  const double doppler = std::sqrt((1.0 - spec.beta) * (1.0 + spec.beta)) / denom;
  const double magnitude = spec.r0 * omega1 / std::cos(spec.mu) * doppler;
  return PhasorAmplitude{magnitude, omega1 + kTwoPi * static_cast<double>(k)};
}

Mesh build_mesh(const InvoluteSpec& spec, int mu_steps) {
  validate(spec);
  if (spec.samples_per_turn < 8) throw domain_error("build_mesh: samples_per_turn must be >= 8");
  if (mu_steps < 2) throw domain_error("build_mesh: mu_steps must be >= 2");
  const std::int64_t turns = static_cast<std::int64_t>(spec.k_max) + 1;
  const std::int64_t columns = static_cast<std::int64_t>(spec.samples_per_turn) * turns;
  const std::int64_t vertex_count = columns * mu_steps;
  if (vertex_count > 10'000'000) {
    throw resource_error("build_mesh: vertex count exceeds 10^7");
  }

  Mesh mesh;
  mesh.scale = spec.r0;
  mesh.vertices.reserve(static_cast<std::size_t>(vertex_count));
  const double chir = static_cast<double>(spec.chirality);
  for (int m = 0; m < mu_steps; ++m) {
    const double mu = -M_PI / 4.0 +
                      (M_PI / 2.0) * static_cast<double>(m) / static_cast<double>(mu_steps - 1);
    const double blend = std::abs(mu) / (M_PI / 4.0);  // 0 at the involute equator
    const double pitch = std::tan(mu);
    for (std::int64_t j = 0; j < columns; ++j) {
      const double theta =
          kTwoPi * static_cast<double>(j + 1) / static_cast<double>(spec.samples_per_turn);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      // footprint interpolates from the plane involute (mu = 0) to the
      // circular helicoid footprint (|mu| = pi/4); the lift is the helicoid's
      const double x = (1.0 - blend) * (c + theta * s) + blend * c;
      const double y = (1.0 - blend) * (s - theta * c) + blend * s;
      const double z = theta * pitch;
      mesh.vertices.emplace_back(x, chir * y, chir * z);
    }
  }

  mesh.triangles.reserve(static_cast<std::size_t>(2 * (mu_steps - 1) * (columns - 1)));
  for (std::int32_t m = 0; m + 1 < mu_steps; ++m) {
    for (std::int32_t j = 0; j + 1 < columns; ++j) {
      const std::int32_t v00 = m * static_cast<std::int32_t>(columns) + j;
      const std::int32_t v01 = v00 + 1;
      const std::int32_t v10 = v00 + static_cast<std::int32_t>(columns);
      const std::int32_t v11 = v10 + 1;
      mesh.triangles.push_back({v00, v01, v11});
      mesh.triangles.push_back({v00, v11, v10});
    }
  }

  for (const auto& tri : mesh.triangles) {
    const Eigen::Vector3d a = mesh.vertices[tri[1]] - mesh.vertices[tri[0]];
    const Eigen::Vector3d b = mesh.vertices[tri[2]] - mesh.vertices[tri[0]];
    if (!(0.5 * a.cross(b).norm() > 1e-18)) {
      throw domain_error("build_mesh: degenerate triangle");
    }
  }
  return mesh;
}

std::string to_obj(const Mesh& mesh) {
  std::string out;
  out.reserve(mesh.vertices.size() * 64 + mesh.triangles.size() * 24 + 128);
  char buf[160];
  out += "# involute surface mesh, coordinates in units of r0\n";
  std::snprintf(buf, sizeof buf, "# scale_r0_m = %.17g\n", mesh.scale);
  out += buf;
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    out += buf;
  }
  for (const auto& t : mesh.triangles) {
    std::snprintf(buf, sizeof buf, "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
    out += buf;
  }
  return out;
}

InvolutePair pair_create(double lambda_i, double lambda0) {
  if (!(lambda_i > 0.0) || !(lambda0 > 0.0)) {
    throw domain_error("pair_create: wavelengths must be positive");
  }
  InvoluteSpec base{};
  base.r0 = resonance_radius(lambda0, 1);
  base.omega_max = kTwoPi;
  InvolutePair pair{base, base, std::abs(lambda_i - lambda0 / 2.0) <= 1e-12 * lambda0};
  pair.plus.chirality = 1;
  pair.minus.chirality = -1;
  return pair;
}

Eigen::Vector2d arc_centroid(const std::vector<Eigen::Vector2d>& polyline) {
  if (polyline.size() < 2) throw domain_error("arc_centroid: need at least 2 points");
  Eigen::Vector2d weighted = Eigen::Vector2d::Zero();
  double length = 0.0;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const double seg = (polyline[i + 1] - polyline[i]).norm();
    weighted += seg * 0.5 * (polyline[i] + polyline[i + 1]);
    length += seg;
  }
  if (!(length > 0.0)) throw domain_error("arc_centroid: degenerate polyline");
  return weighted / length;
}

double eccentricity(const InvoluteSpec& spec, double omega_window_start) {
  validate(spec);
  if (spec.samples_per_turn < 8) {
    throw domain_error("eccentricity: insufficient samples in window");
  }
  if (omega_window_start < 0.0) {
    throw domain_error("eccentricity: window start must be non-negative");
  }
  const double extent = spec.omega_max + kTwoPi * static_cast<double>(spec.k_max);
  if (omega_window_start + kTwoPi > extent * (1.0 + 1e-12)) {
    throw domain_error("eccentricity: window exceeds the sampled range");
  }
  std::vector<Eigen::Vector2d> window;
  window.reserve(spec.samples_per_turn + 1);
  for (int j = 0; j <= spec.samples_per_turn; ++j) {
    const double theta = omega_window_start +
                         kTwoPi * static_cast<double>(j) / static_cast<double>(spec.samples_per_turn);
    window.push_back(involute_point(spec.r0, theta, spec.chirality, 1.0));
  }
  return arc_centroid(window).norm();
}

std::vector<Eigen::Vector2d> doppler_deformed_involute(const InvoluteSpec& spec) {
  validate(spec);
  return sample_involute(spec, [&spec](double theta) { return doppler_stretch(spec, theta); });
}

}  // namespace wft
