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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "wft/errors.hpp"
#include "wft/waves.hpp"

using namespace wft;

namespace {

ResidualGrid grid_for(const WaveField& f, double h_div, double wavelengths = 4.0) {
  const Constants& k = default_constants();
  const double period = f.lambda0 / k.c;
  return ResidualGrid{0.0, wavelengths * f.lambda0, 0.0, wavelengths * period,
                      f.lambda0 / h_div};
}

}  // namespace

TEST_CASE("wave field construction") {
  const WaveField f(2.0, 0.5);
  CHECK(f.K0 == M_PI);
  CHECK(f.omega0 == default_constants().c * f.K0);  // exact by construction
  CHECK_THROWS_AS(WaveField(0.0, 0.5), domain_error);
  CHECK_THROWS_AS(WaveField(1.0, 1.0), domain_error);
}

TEST_CASE("rest field values") {
  const WaveField f(1.0, 0.0);
  const double period = 1.0 / default_constants().c;
  CHECK(rest_field(f, 0.0, 0.0) == 1.0);
  // node a quarter wavelength in
  CHECK(std::abs(rest_field(f, 0.25, 0.0)) < 1e-15);
  CHECK(std::abs(rest_field(f, 0.25, 0.37 * period)) < 1e-15);
  // periodicity
  CHECK(rest_field(f, 1.0, period) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("boosted field reduces to the rest field bit-for-bit at beta 0") {
  const WaveField f(3.7e-3, 0.0);
  for (double x = -2.0 * f.lambda0; x <= 2.0 * f.lambda0; x += 0.13 * f.lambda0) {
    for (double t = 0.0; t < 3e-11; t += 1.7e-12) {
      CHECK(boosted_field(f, x, t) == rest_field(f, x, t));
    }
  }
}

TEST_CASE("factor speeds: group at beta c, phase at c over beta") {
  const Constants& k = default_constants();
  const double beta = 0.6;
  const WaveField f(1.0, beta);
  const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
  const double omega = gamma * f.omega0;
  const double K = gamma * f.K0;
  // first factor cos(Kx - beta omega t) keeps its phase along x = beta c t
  const double t1 = 7.3e-10;
  CHECK(K * (beta * k.c * t1) - beta * omega * t1 == doctest::Approx(0.0));
  // second factor cos(omega t - beta K x) keeps its phase along x = (c/beta) t
  CHECK(omega * t1 - beta * K * (k.c / beta) * t1 == doctest::Approx(0.0));
  CHECK(k.c / beta > k.c);  // superluminal phase wave
}

TEST_CASE("hamilton-jacobi residual is round-off only") {
  for (double beta : {0.0, 0.3, 0.6, 0.9}) {
    const WaveField f(2.42631e-12, beta);
    const double k0sq = f.K0 * f.K0;
    const double res = hamilton_jacobi_residual(f, grid_for(f, 200.0));
    CHECK(res < 1e-6 * k0sq);
  }
}

TEST_CASE("hamilton-jacobi residual is independent of grid offset") {
  const WaveField f(1.0, 0.6);
  const Constants& k = default_constants();
  const double period = 1.0 / k.c;
  const ResidualGrid a{0.0, 4.0, 0.0, 4.0 * period, 1.0 / 100.0};
  const ResidualGrid b{17.25, 21.25, 5.0 * period, 9.0 * period, 1.0 / 100.0};
  const double ra = hamilton_jacobi_residual(f, a);
  const double rb = hamilton_jacobi_residual(f, b);
  // both are round-off noise at the same scale
  CHECK(ra < 1e-10 * f.K0 * f.K0);
  CHECK(rb < 1e-10 * f.K0 * f.K0);
}

TEST_CASE("klein-gordon residual converges at second order") {
  for (double beta : {0.0, 0.3, 0.6, 0.9}) {
    const WaveField f(1.0, beta);
    const auto report = klein_gordon_residual(f, grid_for(f, 100.0));
    CHECK(std::abs(report.order - 2.0) < 0.1);
    CHECK(report.residual_half_h < report.residual_h);
    // truncation estimate: (h K)^2 / 12 * gamma^4 (1 - beta^4) k0^2
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    const double est = std::pow(2.0 * M_PI / 100.0, 2) / 12.0 * std::pow(gamma, 4) *
                       (1.0 - std::pow(beta, 4)) * f.K0 * f.K0;
    if (beta > 0.0) {
      CHECK(report.residual_h == doctest::Approx(est).epsilon(0.2));
    }
  }
}

TEST_CASE("negative-frequency branch has the same residual") {
  const WaveField f(1.0, 0.45);
  const auto plus = klein_gordon_residual(f, grid_for(f, 100.0), +1);
  const auto minus = klein_gordon_residual(f, grid_for(f, 100.0), -1);
  CHECK(minus.residual_h == doctest::Approx(plus.residual_h).epsilon(0.01));
  CHECK(std::abs(minus.order - 2.0) < 0.1);
}

TEST_CASE("degenerate grids are rejected") {
  const WaveField f(1.0, 0.5);
  CHECK_THROWS_AS(hamilton_jacobi_residual(f, ResidualGrid{0, 4, 0, 1e-8, 0.0}), domain_error);
  CHECK_THROWS_AS(hamilton_jacobi_residual(f, ResidualGrid{0, 2.9, 0, 1e-8, 0.01}),
                  domain_error);  // under 3 wavelengths
  CHECK_THROWS_AS(klein_gordon_residual(f, ResidualGrid{0, 4, 1e-8, 0, 0.01}), domain_error);
  CHECK_THROWS_AS(klein_gordon_residual(f, grid_for(f, 100.0), 2), domain_error);
}
