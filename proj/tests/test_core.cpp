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
#include <cstring>
#include <random>
#include <sstream>

#include "doctest.h"
#include "wft/core.hpp"
#include "wft/errors.hpp"

using namespace wft;

namespace {
double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("rest_wavelength matches h/(c m0)") {
  const Constants& k = default_constants();
  CHECK(rest_wavelength(k.h / k.c) == doctest::Approx(1.0).epsilon(1e-15));
  // electron
  CHECK(rel_err(rest_wavelength(9.1093837e-31), 2.4263102390826216e-12) < 1e-12);
  // mass whose wavelength is the terminal length
  CHECK(rel_err(rest_wavelength(k.h / (k.L * k.c)), k.L) < 1e-14);
  CHECK_THROWS_AS(rest_wavelength(0.0), domain_error);
  CHECK_THROWS_AS(rest_wavelength(-1.0), domain_error);
}

TEST_CASE("mass_from_wavelength is the exact inverse") {
  const Constants& k = default_constants();
  CHECK(rel_err(mass_from_wavelength(1.0), 2.2102190943042335e-42) < 1e-14);
  CHECK(rel_err(mass_from_wavelength(k.L), 4.525098281747346e+41) < 1e-14);
  CHECK_THROWS_AS(mass_from_wavelength(0.0), domain_error);

  // round trip over 85 decades
  std::mt19937 rng(20260809);
  std::uniform_real_distribution<double> exp10(-40.0, 45.0);
  for (int i = 0; i < 2000; ++i) {
    const double m = std::pow(10.0, exp10(rng));
    CHECK(rel_err(mass_from_wavelength(rest_wavelength(m)), m) < 1e-14);
  }
}

TEST_CASE("particle ties wavelength, mass and c together") {
  const Constants& k = default_constants();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> exp10(-31.0, 2.0);
  std::uniform_real_distribution<double> betas(-0.999, 0.999);
  for (int i = 0; i < 500; ++i) {
    const Particle p = Particle::from_mass(std::pow(10.0, exp10(rng)), betas(rng), k);
    CHECK(rel_err(p.lambda0 * p.m0 * k.c, k.h) < 1e-15);
  }
  const Particle q = Particle::from_wavelength(2.42631e-12, 0.5, k);
  CHECK(rel_err(q.m0, 9.109384597616272e-31) < 1e-12);
  CHECK_THROWS_AS(Particle::from_mass(1.0, 1.0, k), domain_error);
  CHECK_THROWS_AS(Particle::from_mass(1.0, -1.5, k), domain_error);
}

TEST_CASE("photon requires a unit direction") {
  CHECK_NOTHROW(Photon(5e-7, Eigen::Vector3d(0, 0, 1)));
  CHECK_NOTHROW(Photon(5e-7, Eigen::Vector3d(1, 1, 1).normalized()));
  CHECK_THROWS_AS(Photon(5e-7, Eigen::Vector3d(0, 0, 1.001)), domain_error);
  CHECK_THROWS_AS(Photon(0.0, Eigen::Vector3d(0, 0, 1)), domain_error);
}

TEST_CASE("constants defaults") {
  const Constants& k = default_constants();
  CHECK(k.h == 6.62607015e-34);
  CHECK(k.c == 299792458.0);
  CHECK(k.G == 6.67430e-11);
  CHECK(k.L == 4.884356e-84);
  CHECK(k.N_coeff == 1.8777557e14);
  CHECK(k.alpha_inv == 137.024);
}

TEST_CASE("constants config parsing") {
  std::istringstream in(
      "# overrides\n"
      "L = 1e-80\n"
      "\n"
      "G=6.6743e-11   # trailing comment\n");
  const Constants k = parse_constants(in);
  CHECK(k.L == 1e-80);
  CHECK(k.G == 6.6743e-11);
  CHECK(k.h == default_constants().h);  // absent keys keep defaults

  // identical text twice -> bit-identical registries
  std::istringstream a("h = 6.626e-34\nc = 2.9979e8\n");
  std::istringstream b("h = 6.626e-34\nc = 2.9979e8\n");
  const Constants ka = parse_constants(a);
  const Constants kb = parse_constants(b);
  CHECK(std::memcmp(&ka, &kb, sizeof(Constants)) == 0);

  std::istringstream bad_key("hbar = 1e-34\n");
  CHECK_THROWS_AS(parse_constants(bad_key), std::invalid_argument);
  std::istringstream bad_value("h = fast\n");
  CHECK_THROWS_AS(parse_constants(bad_value), std::invalid_argument);
  std::istringstream non_positive("c = -1\n");
  CHECK_THROWS_AS(parse_constants(non_positive), std::invalid_argument);
  std::istringstream no_eq("h 6.6e-34\n");
  CHECK_THROWS_AS(parse_constants(no_eq), std::invalid_argument);
  CHECK_THROWS_AS(load_constants("/nonexistent/constants.cfg"), std::invalid_argument);
}
