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

#include "wft/waves.hpp"

#include <cmath>

#include "wft/errors.hpp"

namespace wft {

namespace {

double gamma_of(double beta) { return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta)); }

double field_value(double K, double omega, double beta, double x, double t) {
  return std::cos(K * x - beta * omega * t) * std::cos(omega * t - beta * K * x);
}

void check_grid(const WaveField& f, const ResidualGrid& g) {
  if (!(g.h > 0.0)) throw domain_error("residual grid: step must be positive");
  if (!(g.x_max > g.x_min) || !(g.t_max > g.t_min)) {
    throw domain_error("residual grid: empty range");
  }
  if (g.x_max - g.x_min < 3.0 * f.lambda0) {
    throw domain_error("residual grid: must span at least 3 wavelengths");
  }
}

}  // namespace

WaveField::WaveField(double lam, double b, const Constants& k) : lambda0(lam), beta(b) {
  if (!(lambda0 > 0.0)) throw domain_error("wave field: lambda0 must be positive");
  if (!(std::abs(beta) < 1.0)) throw domain_error("wave field: |beta| must be < 1");
  K0 = 2.0 * M_PI / lambda0;
  omega0 = k.c * K0;
}

double rest_field(const WaveField& f, double x, double t) {
  return field_value(f.K0, f.omega0, 0.0, x, t);
}

double boosted_field(const WaveField& f, double x, double t) {
  const double gamma = gamma_of(f.beta);
  return field_value(gamma * f.K0, gamma * f.omega0, f.beta, x, t);
}

double hamilton_jacobi_residual(const WaveField& f, const ResidualGrid& g, const Constants& k) {
  check_grid(f, g);
  const double gamma = gamma_of(f.beta);
  const double omega = gamma * f.omega0;
  const double bK = f.beta * gamma * f.K0;
  const double k0 = f.omega0 / k.c;
  const double k0sq = k0 * k0;
  const auto phase = [&](double x, double t) { return omega * t - bK * x; };

  const double ht = g.h / k.c;
  const auto nx = static_cast<std::int64_t>(std::floor((g.x_max - g.x_min) / g.h)) + 1;
  const auto nt = static_cast<std::int64_t>(std::floor((g.t_max - g.t_min) / ht)) + 1;

  double max_abs = 0.0;
  for (std::int64_t j = 0; j < nt; ++j) {
    const double t = g.t_min + static_cast<double>(j) * ht;
    for (std::int64_t i = 0; i < nx; ++i) {
      const double x = g.x_min + static_cast<double>(i) * g.h;
      const double dSdt = (phase(x, t + ht) - phase(x, t - ht)) / (2.0 * ht);
      const double dSdx = (phase(x + g.h, t) - phase(x - g.h, t)) / (2.0 * g.h);
      const double res = dSdt * dSdt / (k.c * k.c) - dSdx * dSdx - k0sq;
      max_abs = std::max(max_abs, std::abs(res));
    }
  }
  return max_abs;
}

namespace {

double kg_max_residual(const WaveField& f, const ResidualGrid& g, int sign, double h,
                       const Constants& k) {
  const double gamma = gamma_of(f.beta);
  const double omega = static_cast<double>(sign) * gamma * f.omega0;
  const double bK = f.beta * gamma * f.K0;
  const double k0 = f.omega0 / k.c;
  const double k0sq = k0 * k0;
  const auto psi = [&](double x, double t) { return std::cos(omega * t - bK * x); };

  const double ht = h / k.c;
  const double csq = k.c * k.c;
  const auto nx = static_cast<std::int64_t>(std::floor((g.x_max - g.x_min) / h)) + 1;
  const auto nt = static_cast<std::int64_t>(std::floor((g.t_max - g.t_min) / ht)) + 1;

  double max_abs = 0.0;
  for (std::int64_t j = 0; j < nt; ++j) {
    const double t = g.t_min + static_cast<double>(j) * ht;
    for (std::int64_t i = 0; i < nx; ++i) {
      const double x = g.x_min + static_cast<double>(i) * h;
      const double center = psi(x, t);
      const double d2x = (psi(x + h, t) - 2.0 * center + psi(x - h, t)) / (h * h);
      const double d2t = (psi(x, t + ht) - 2.0 * center + psi(x, t - ht)) / (ht * ht);
      const double res = -d2x + d2t / csq + k0sq * center;
      max_abs = std::max(max_abs, std::abs(res));
    }
  }
  return max_abs;
}

}  // namespace

KleinGordonReport klein_gordon_residual(const WaveField& f, const ResidualGrid& g,
                                        int frequency_sign, const Constants& k) {
  check_grid(f, g);
  if (frequency_sign != 1 && frequency_sign != -1) {
    throw domain_error("klein_gordon_residual: frequency_sign must be +1 or -1");
  }
  KleinGordonReport report{};
  report.residual_h = kg_max_residual(f, g, frequency_sign, g.h, k);
  report.residual_half_h = kg_max_residual(f, g, frequency_sign, g.h / 2.0, k);
  report.order = std::log2(report.residual_h / report.residual_half_h);
  return report;
}

}  // namespace wft
