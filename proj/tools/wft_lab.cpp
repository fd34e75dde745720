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

// wft-lab: command-line front end. One subcommand per module operation or
// sweep; every run echoes the resolved constants and a schema-version field
// and produces byte-identical output for identical configs.
//
// Exit codes: 0 success, 2 validation error, 3 domain/singularity error,
// 4 resource error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_writer.hpp"
#include "wft/compton.hpp"
#include "wft/constants.hpp"
#include "wft/core.hpp"
#include "wft/deflection.hpp"
#include "wft/errors.hpp"
#include "wft/gravity.hpp"
#include "wft/involute.hpp"
#include "wft/kinematics.hpp"
#include "wft/lattice.hpp"
#include "wft/waves.hpp"

namespace {

using wftcli::JsonObject;

constexpr int kSchemaVersion = 1;
constexpr double kElectronMass = 9.1093837015e-31;  // kg, CODATA 2018
constexpr double kProtonMass = 1.67262192369e-27;   // kg, CODATA 2018

struct GlobalOptions {
  std::string constants_path;
  std::string output_path;
  std::string format;  // empty = subcommand default
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

wft::Constants resolve_constants(const GlobalOptions& g) {
  if (g.constants_path.empty()) return wft::default_constants();
  return wft::load_constants(g.constants_path);
}

std::string pick_format(const GlobalOptions& g, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  const std::string format = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed) {
    if (format == a) return format;
  }
  throw std::invalid_argument("unsupported output format '" + format + "' for this subcommand");
}

void write_output(const GlobalOptions& g, const std::string& payload) {
  if (g.output_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
  } else {
    std::ofstream out(g.output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output path '" + g.output_path + "'");
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  }
}

JsonObject constants_object(const wft::Constants& k) {
  JsonObject o;
  o.number("h", k.h)
      .number("c", k.c)
      .number("G", k.G)
      .number("L", k.L)
      .number("N_coeff", k.N_coeff)
      .number("alpha_inv", k.alpha_inv);
  return o;
}

JsonObject report_root(const wft::Constants& k) {
  JsonObject root;
  root.integer("schema_version", kSchemaVersion);
  root.object("constants", constants_object(k));
  return root;
}

std::string preamble(const wft::Constants& k) {
  std::string out = "# schema_version = 1\n";
  out += "# h = " + fmt(k.h) + "\n";
  out += "# c = " + fmt(k.c) + "\n";
  out += "# G = " + fmt(k.G) + "\n";
  out += "# L = " + fmt(k.L) + "\n";
  out += "# N_coeff = " + fmt(k.N_coeff) + "\n";
  out += "# alpha_inv = " + fmt(k.alpha_inv) + "\n";
  return out;
}

std::string csv_row(std::initializer_list<double> values) {
  std::string row;
  bool first = true;
  for (double v : values) {
    if (!first) row += ",";
    row += fmt(v);
    first = false;
  }
  row += "\n";
  return row;
}

void emit_json(const GlobalOptions& g, const JsonObject& root) {
  write_output(g, root.str() + "\n");
}

double mass_from_flags(const std::string& particle, double m0, bool has_m0) {
  if (!particle.empty() && has_m0) {
    throw std::invalid_argument("give either --particle or an explicit mass, not both");
  }
  if (!particle.empty()) {
    if (particle == "electron") return kElectronMass;
    if (particle == "proton") return kProtonMass;
    throw std::invalid_argument("unknown particle '" + particle + "'");
  }
  if (!has_m0) throw std::invalid_argument("a mass is required (--m0 or --particle)");
  return m0;
}

std::vector<double> linear_sweep(double lo, double hi, int steps) {
  if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
  if (!(hi > lo)) throw std::invalid_argument("sweep range must be increasing");
  std::vector<double> values;
  values.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    values.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  return values;
}

// ---------------------------------------------------------------- lattice

void add_lattice(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  auto t_max = std::make_shared<std::int64_t>(1);
  CLI::App* cmd = app.add_subcommand("lattice", "enumerate admissible lattice vectors");
  cmd->add_option("--t-max", *t_max, "largest time component")->required();
  cmd->callback([t_max, g] {
    const wft::Constants k = resolve_constants(*g);
    const std::string format = pick_format(*g, "csv", {"csv", "json"});
    const auto vectors = wft::enumerate_vectors(*t_max);
    if (format == "csv") {
      std::string out = preamble(k);
      out += "t,x,y,z,beta\n";
      for (const auto& v : vectors) {
        out += std::to_string(v.t) + "," + std::to_string(v.x) + "," + std::to_string(v.y) +
               "," + std::to_string(v.z) + "," + fmt(wft::perturbation_speed(v)) + "\n";
      }
      write_output(*g, out);
    } else {
      JsonObject root = report_root(k);
      root.integer("t_max", *t_max);
      std::vector<JsonObject> rows;
      rows.reserve(vectors.size());
      for (const auto& v : vectors) {
        JsonObject row;
        row.integer("t", v.t).integer("x", v.x).integer("y", v.y).integer("z", v.z);
        row.number("beta", wft::perturbation_speed(v));
        rows.push_back(std::move(row));
      }
      root.array("vectors", std::move(rows));
      emit_json(*g, root);
    }
  });
}

// ---------------------------------------------------------------- doppler

void add_doppler(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  struct Options {
    double lambda_emit = 0.0;
    double phi = 0.0;
    double beta = 0.0;
    double beta_min = 0.0, beta_max = 0.0;
    int beta_steps = 0;
  };
  auto o = std::make_shared<Options>();
  CLI::App* cmd = app.add_subcommand("doppler", "observed wavelength of a moving source");
  cmd->add_option("--lambda-emit", o->lambda_emit, "wavelength in the source frame, m")
      ->required();
  cmd->add_option("--phi", o->phi, "line-of-sight angle, rad");
  auto* beta = cmd->add_option("--beta", o->beta, "source speed fraction");
  cmd->add_option("--beta-min", o->beta_min, "sweep start");
  auto* bmax = cmd->add_option("--beta-max", o->beta_max, "sweep end");
  cmd->add_option("--beta-steps", o->beta_steps, "sweep point count");
  cmd->callback([o, g, beta, bmax] {
    const wft::Constants k = resolve_constants(*g);
    const bool sweep = bmax->count() > 0;
    if ((beta->count() > 0) == sweep) {
      throw std::invalid_argument("give either --beta or a --beta-min/--beta-max sweep");
    }
    if (!sweep) {
      const double lambda_obs = wft::doppler_wavelength(o->lambda_emit, o->beta, o->phi);
      const std::string format = pick_format(*g, "json", {"json", "csv"});
      if (format == "json") {
        JsonObject root = report_root(k);
        root.number("lambda_emit", o->lambda_emit)
            .number("beta", o->beta)
            .number("phi", o->phi)
            .number("lambda_obs", lambda_obs);
        emit_json(*g, root);
      } else {
        write_output(*g, preamble(k) + "beta,phi,lambda_obs\n" +
                             csv_row({o->beta, o->phi, lambda_obs}));
      }
      return;
    }
    pick_format(*g, "csv", {"csv"});
    std::string out = preamble(k) + "beta,phi,lambda_obs\n";
    for (double b : linear_sweep(o->beta_min, o->beta_max, o->beta_steps)) {
      out += csv_row({b, o->phi, wft::doppler_wavelength(o->lambda_emit, b, o->phi)});
    }
    write_output(*g, out);
  });
}

// ---------------------------------------------------------------- momentum

void add_momentum(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  struct Options {
    double m0 = 0.0;
    std::string particle;
    double beta = 0.0;
  };
  auto o = std::make_shared<Options>();
  CLI::App* cmd = app.add_subcommand("momentum", "relativistic wave momentum");
  auto* m0 = cmd->add_option("--m0", o->m0, "rest mass, kg");
  cmd->add_option("--particle", o->particle, "electron | proton");
  cmd->add_option("--beta", o->beta, "speed fraction")->required();
  cmd->callback([o, g, m0] {
    const wft::Constants k = resolve_constants(*g);
    pick_format(*g, "json", {"json"});
    const double mass = mass_from_flags(o->particle, o->m0, m0->count() > 0);
    JsonObject root = report_root(k);
    root.number("m0", mass)
        .number("beta", o->beta)
        .number("p", wft::wave_momentum(mass, o->beta, k))
        .number("lambda_b", wft::de_broglie_wavelength(wft::rest_wavelength(mass, k), o->beta));
    emit_json(*g, root);
  });
}

// ---------------------------------------------------------------- energy

void add_energy(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  struct Options {
    double lambda0 = 0.0;
    double m0 = 0.0;
    std::string particle;
    double beta = 0.0;
    double beta_min = 0.0, beta_max = 0.0;
    int beta_steps = 0;
  };
  auto o = std::make_shared<Options>();
  CLI::App* cmd = app.add_subcommand("energy", "forward/backward wave energy pair");
  auto* lam = cmd->add_option("--lambda0", o->lambda0, "rest wavelength, m");
  auto* m0 = cmd->add_option("--m0", o->m0, "rest mass, kg");
  cmd->add_option("--particle", o->particle, "electron | proton");
  auto* beta = cmd->add_option("--beta", o->beta, "speed fraction");
  cmd->add_option("--beta-min", o->beta_min, "sweep start");
  auto* bmax = cmd->add_option("--beta-max", o->beta_max, "sweep end");
  cmd->add_option("--beta-steps", o->beta_steps, "sweep point count");
  cmd->callback([o, g, lam, m0, beta, bmax] {
    const wft::Constants k = resolve_constants(*g);
    double lambda0 = o->lambda0;
    if (lam->count() == 0) {
      lambda0 = wft::rest_wavelength(mass_from_flags(o->particle, o->m0, m0->count() > 0), k);
    }
    const bool sweep = bmax->count() > 0;
    if ((beta->count() > 0) == sweep) {
      throw std::invalid_argument("give either --beta or a --beta-min/--beta-max sweep");
    }
    if (!sweep) {
      const wft::EnergyPair pair = wft::energy_pair(lambda0, o->beta, k);
      const std::string format = pick_format(*g, "json", {"json", "csv"});
      if (format == "json") {
        JsonObject root = report_root(k);
        root.number("lambda0", lambda0)
            .number("beta", o->beta)
            .number("E1", pair.E1)
            .number("E2", pair.E2)
            .number("dE", pair.dE)
            .number("Em", pair.Em);
        emit_json(*g, root);
      } else {
        write_output(*g, preamble(k) + "beta,E1,E2,dE,Em\n" +
                             csv_row({o->beta, pair.E1, pair.E2, pair.dE, pair.Em}));
      }
      return;
    }
    pick_format(*g, "csv", {"csv"});
    std::string out = preamble(k) + "beta,E1,E2,dE,Em\n";
    for (double b : linear_sweep(o->beta_min, o->beta_max, o->beta_steps)) {
      const wft::EnergyPair pair = wft::energy_pair(lambda0, b, k);
      out += csv_row({b, pair.E1, pair.E2, pair.dE, pair.Em});
    }
    write_output(*g, out);
  });
}

// ---------------------------------------------------------------- waves

void add_waves(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  struct Options {
    double lambda0 = 0.0;
    double beta = 0.0;
    double h_div = 200.0;
    double wavelengths = 4.0;
    bool field_samples = false;
  };
  auto o = std::make_shared<Options>();
  CLI::App* cmd = app.add_subcommand(
      "waves-residual", "Hamilton-Jacobi / Klein-Gordon residuals of the boosted wave");
  cmd->add_option("--lambda0", o->lambda0, "rest wavelength, m")->required();
  cmd->add_option("--beta", o->beta, "source speed fraction")->required();
  cmd->add_option("--h-div", o->h_div, "step divisor: h = lambda0 / h-div");
  cmd->add_option("--wavelengths", o->wavelengths, "grid extent in wavelengths");
  cmd->add_flag("--field-samples", o->field_samples, "emit x,t,amplitude CSV instead");
  cmd->callback([o, g] {
    const wft::Constants k = resolve_constants(*g);
    const wft::WaveField field(o->lambda0, o->beta, k);
    if (!(o->h_div > 0.0)) throw std::invalid_argument("--h-div must be positive");
    const double h = o->lambda0 / o->h_div;
    const double period = o->lambda0 / k.c;
    const wft::ResidualGrid grid{0.0, o->wavelengths * o->lambda0, 0.0,
                                 o->wavelengths * period, h};
    if (o->field_samples) {
      pick_format(*g, "csv", {"csv"});
      std::string out = preamble(k) + "x,t,amplitude\n";
      const double ht = h / k.c;
      const auto nx = static_cast<long long>(std::floor((grid.x_max - grid.x_min) / h)) + 1;
      const auto nt = static_cast<long long>(std::floor((grid.t_max - grid.t_min) / ht)) + 1;
      for (long long j = 0; j < nt; ++j) {
        const double t = grid.t_min + static_cast<double>(j) * ht;
        for (long long i = 0; i < nx; ++i) {
          const double x = grid.x_min + static_cast<double>(i) * h;
          out += csv_row({x, t, wft::boosted_field(field, x, t)});
        }
      }
      write_output(*g, out);
      return;
    }
    pick_format(*g, "json", {"json"});
    const double hj = wft::hamilton_jacobi_residual(field, grid, k);
    const auto kg = wft::klein_gordon_residual(field, grid, +1, k);
    const auto kg_neg = wft::klein_gordon_residual(field, grid, -1, k);
    JsonObject root = report_root(k);
    root.number("lambda0", o->lambda0)
        .number("beta", o->beta)
        .number("omega0", field.omega0)
        .number("K0", field.K0)
        .number("h", h)
        .number("hj_residual_max", hj)
        .number("kg_residual_h", kg.residual_h)
        .number("kg_residual_half_h", kg.residual_half_h)
        .number("kg_order", kg.order)
        .number("kg_negative_branch_residual_h", kg_neg.residual_h)
        .number("kg_negative_branch_order", kg_neg.order);
    emit_json(*g, root);
  });
}

// ---------------------------------------------------------------- deflect

void add_deflect(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  struct Options {
    double m = 0.0;
    double lambda_mass = 0.0;
    double r = 0.0;
    double lambda_i = 0.0;
    double r_min = 0.0, r_max = 0.0;
    int r_steps = 0;
  };
  auto o = std::make_shared<Options>();
  CLI::App* cmd = app.add_subcommand("deflect", "light-deflection angles");
  auto* m = cmd->add_option("--m", o->m, "deflector mass, kg");
  auto* lam = cmd->add_option("--lambda-mass", o->lambda_mass, "deflector wavelength, m");
  auto* r = cmd->add_option("--r", o->r, "closest approach, m");
  cmd->add_option("--lambda-i", o->lambda_i, "incident photon wavelength, m");
  cmd->add_option("--r-min", o->r_min, "sweep start");
  auto* rmax = cmd->add_option("--r-max", o->r_max, "sweep end");
  cmd->add_option("--r-steps", o->r_steps, "sweep point count");
  cmd->callback([o, g, m, lam, r, rmax] {
    const wft::Constants k = resolve_constants(*g);
    if ((m->count() > 0) == (lam->count() > 0)) {
      throw std::invalid_argument("give exactly one of --m or --lambda-mass");
    }
    double mass = o->m;
    double lambda_mass = o->lambda_mass;
    if (m->count() > 0) {
      lambda_mass = wft::rest_wavelength(mass, k);
    } else {
      mass = wft::mass_from_wavelength(lambda_mass, k);
    }
    const bool sweep = rmax->count() > 0;
    if ((r->count() > 0) == sweep) {
      throw std::invalid_argument("give either --r or an --r-min/--r-max sweep");
    }
    if (!sweep) {
      const auto d = wft::extended_deflection(lambda_mass, o->lambda_i, o->r, k);
      pick_format(*g, "json", {"json"});
      JsonObject root = report_root(k);
      root.number("m", mass)
          .number("lambda_mass", lambda_mass)
          .number("lambda_i", o->lambda_i)
          .number("r", o->r)
          .number("term1", d.term1)
          .number("term2", d.term2)
          .number("total", d.total)
          .number("crossover_lambda_i", d.crossover_lambda_i);
      emit_json(*g, root);
      return;
    }
    pick_format(*g, "csv", {"csv"});
    std::string out = preamble(k) + "lambda_mass,lambda_i,r,term1,term2,total\n";
    for (double rr : linear_sweep(o->r_min, o->r_max, o->r_steps)) {
      const auto d = wft::extended_deflection(lambda_mass, o->lambda_i, rr, k);
      out += csv_row({lambda_mass, o->lambda_i, rr, d.term1, d.term2, d.total});
    }
    write_output(*g, out);
  });
}

// ---------------------------------------------------------------- compton

void add_compton(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  struct Options {
    double lambda_i = 0.0;
    double lambda0 = 0.0;
    std::string particle;
    double alpha = M_PI / 2.0;
    double lambda_i_min = 0.0, lambda_i_max = 0.0;
    int lambda_i_steps = 0;
  };
  auto o = std::make_shared<Options>();
  CLI::App* cmd = app.add_subcommand("compton", "two-stage wave Compton pipeline");
  auto* li = cmd->add_option("--lambda-i", o->lambda_i, "incident wavelength, m");
  auto* l0 = cmd->add_option("--lambda0", o->lambda0, "particle rest wavelength, m");
  cmd->add_option("--particle", o->particle, "electron | proton");
  cmd->add_option("--alpha", o->alpha, "deflection angle, rad");
  cmd->add_option("--lambda-i-min", o->lambda_i_min, "sweep start");
  auto* lmax = cmd->add_option("--lambda-i-max", o->lambda_i_max, "sweep end");
  cmd->add_option("--lambda-i-steps", o->lambda_i_steps, "sweep point count");
  cmd->callback([o, g, li, l0, lmax] {
    const wft::Constants k = resolve_constants(*g);
    if ((l0->count() > 0) && !o->particle.empty()) {
      throw std::invalid_argument("give either --lambda0 or --particle, not both");
    }
    double lambda0 = o->lambda0;
    if (l0->count() == 0) {
      lambda0 = wft::rest_wavelength(mass_from_flags(o->particle, 0.0, false), k);
    }
    const bool sweep = lmax->count() > 0;
    if ((li->count() > 0) == sweep) {
      throw std::invalid_argument("give either --lambda-i or a sweep range");
    }
    if (!sweep) {
      const wft::ComptonTrace t = wft::run_pipeline(o->lambda_i, lambda0, o->alpha);
      pick_format(*g, "json", {"json"});
      JsonObject root = report_root(k);
      root.number("lambda_i", t.lambda_i)
          .number("lambda0", t.lambda0)
          .number("alpha", t.alpha)
          .number("v1", t.v1)
          .number("lambda_i1", t.lambda_i1)
          .number("r", t.r)
          .number("lambda_e1", t.lambda_e1)
          .number("v2", t.v2)
          .number("lambda_i2", t.lambda_i2)
          .number("dlambda_paper", t.dlambda_paper)
          .number("dlambda_total", t.dlambda_total)
          .number("dlambda_oracle", t.dlambda_oracle)
          .number("rel_dev_paper", t.rel_dev_paper)
          .number("rel_dev_total", t.rel_dev_total)
          .number("lambda_undecayed", t.lambda_undecayed);
      emit_json(*g, root);
      return;
    }
    pick_format(*g, "csv", {"csv"});
    std::string out = preamble(k) +
                      "lambda_i,v1,lambda_i1,r,lambda_e1,v2,lambda_i2,"
                      "dlambda_paper,dlambda_total,dlambda_oracle\n";
    for (double lam : linear_sweep(o->lambda_i_min, o->lambda_i_max, o->lambda_i_steps)) {
      const wft::ComptonTrace t = wft::run_pipeline(lam, lambda0, o->alpha);
      out += csv_row({t.lambda_i, t.v1, t.lambda_i1, t.r, t.lambda_e1, t.v2, t.lambda_i2,
                      t.dlambda_paper, t.dlambda_total, t.dlambda_oracle});
    }
    write_output(*g, out);
  });
}

// ---------------------------------------------------------------- involute

struct InvoluteCommon {
  double r0 = 1.0;
  double lambda0 = 0.0;
  int n = 1;
  int turns = 1;
  int samples = 256;
  int chirality = 1;
};

CLI::Option* add_involute_flags(CLI::App* cmd, InvoluteCommon& c) {
  cmd->add_option("--r0", c.r0, "resonance radius, m");
  CLI::Option* lambda0_opt = cmd->add_option("--lambda0", c.lambda0, "rest wavelength, m (sets r0)");
  cmd->add_option("--n", c.n, "resonance harmonic for --lambda0");
  cmd->add_option("--turns", c.turns, "number of full turns");
  cmd->add_option("--samples", c.samples, "samples per turn");
  cmd->add_option("--chirality", c.chirality, "+1 or -1");
  return lambda0_opt;
}

wft::InvoluteSpec spec_from(const InvoluteCommon& c, const CLI::Option* lambda0_opt) {
  wft::InvoluteSpec spec{};
  spec.r0 = lambda0_opt->count() > 0 ? wft::resonance_radius(c.lambda0, c.n) : c.r0;
  spec.omega_max = 2.0 * M_PI;
  if (c.turns < 1) throw wft::domain_error("--turns must be at least 1");
  spec.k_max = c.turns - 1;
  spec.chirality = c.chirality;
  spec.samples_per_turn = c.samples;
  return spec;
}

void add_involute(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  CLI::App* inv = app.add_subcommand("involute", "involute curves, surfaces and analysis");
  inv->require_subcommand(1);

  {  // curve
    struct Options {
      InvoluteCommon common;
      std::string type = "plane";
      double omega_max = 0.0;
      double mu = 0.0;
      double beta = 0.0;
      double phi_motion = 0.0;
      int sign = 1;
    };
    auto o = std::make_shared<Options>();
    CLI::App* cmd = inv->add_subcommand("curve", "sample a curve as CSV");
    CLI::Option* lambda0_opt = add_involute_flags(cmd, o->common);
    cmd->add_option("--type", o->type, "plane | helicoid | deformed")
        ->check(CLI::IsMember({"plane", "helicoid", "deformed"}));
    auto* omax = cmd->add_option("--omega-max", o->omega_max, "parameter bound, rad");
    cmd->add_option("--mu", o->mu, "helix angle, rad");
    cmd->add_option("--beta", o->beta, "source speed fraction");
    cmd->add_option("--phi-motion", o->phi_motion, "motion direction, rad");
    cmd->add_option("--sign", o->sign, "helicoid family, +1 or -1");
    cmd->callback([o, g, lambda0_opt, omax] {
      const wft::Constants k = resolve_constants(*g);
      pick_format(*g, "csv", {"csv"});
      wft::InvoluteSpec spec = spec_from(o->common, lambda0_opt);
      if (omax->count() > 0) spec.omega_max = o->omega_max;
      spec.mu = o->mu;
      spec.beta = o->beta;
      spec.phi_motion = o->phi_motion;
      std::string out = preamble(k);
      if (o->type == "helicoid") {
        const auto points = wft::helicoid(spec, o->sign);
        const auto params = wft::helicoid_parameters(spec);
        out += "omega,x,y,z\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
          out += csv_row({params[i], points[i].x(), points[i].y(), points[i].z()});
        }
      } else {
        const auto points = o->type == "plane" ? wft::plane_involute(spec)
                                               : wft::doppler_deformed_involute(spec);
        const auto params = wft::involute_parameters(spec);
        out += "omega,x,y\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
          out += csv_row({params[i], points[i].x(), points[i].y()});
        }
      }
      write_output(*g, out);
    });
  }

  {  // mesh
    struct Options {
      InvoluteCommon common;
      int mu_steps = 9;
    };
    auto o = std::make_shared<Options>();
    o->common.samples = 64;
    CLI::App* cmd = inv->add_subcommand("mesh", "triangulated involute surface as OBJ");
    CLI::Option* lambda0_opt = add_involute_flags(cmd, o->common);
    cmd->add_option("--mu-steps", o->mu_steps, "rows across the helix band");
    cmd->callback([o, g, lambda0_opt] {
      const wft::Constants k = resolve_constants(*g);
      pick_format(*g, "obj", {"obj"});
      const wft::Mesh mesh = wft::build_mesh(spec_from(o->common, lambda0_opt), o->mu_steps);
      write_output(*g, preamble(k) + wft::to_obj(mesh));
    });
  }

  {  // pair
    struct Options {
      double lambda_i = 0.0;
      double lambda0 = 0.0;
    };
    auto o = std::make_shared<Options>();
    CLI::App* cmd = inv->add_subcommand("pair", "mirror involute pair from a wave train");
    cmd->add_option("--lambda-i", o->lambda_i, "incident wavelength, m")->required();
    cmd->add_option("--lambda0", o->lambda0, "particle rest wavelength, m")->required();
    cmd->callback([o, g] {
      const wft::Constants k = resolve_constants(*g);
      pick_format(*g, "json", {"json"});
      const auto pair = wft::pair_create(o->lambda_i, o->lambda0);
      const auto spec_obj = [](const wft::InvoluteSpec& s) {
        JsonObject obj;
        obj.number("r0", s.r0)
            .number("omega_max", s.omega_max)
            .integer("k_max", s.k_max)
            .number("mu", s.mu)
            .integer("chirality", s.chirality)
            .number("beta", s.beta)
            .number("phi_motion", s.phi_motion)
            .integer("samples_per_turn", s.samples_per_turn);
        return obj;
      };
      JsonObject root = report_root(k);
      root.number("lambda_i", o->lambda_i)
          .number("lambda0", o->lambda0)
          .boolean("creation_condition_met", pair.creation_condition_met);
      root.object("plus", spec_obj(pair.plus));
      root.object("minus", spec_obj(pair.minus));
      emit_json(*g, root);
    });
  }

  {  // eccentricity
    struct Options {
      InvoluteCommon common;
      double omega_start = 0.0;
    };
    auto o = std::make_shared<Options>();
    o->common.samples = 2048;
    CLI::App* cmd = inv->add_subcommand("eccentricity", "one-turn arc centroid offset");
    CLI::Option* lambda0_opt = add_involute_flags(cmd, o->common);
    cmd->add_option("--omega-start", o->omega_start, "window start, rad")->required();
    cmd->callback([o, g, lambda0_opt] {
      const wft::Constants k = resolve_constants(*g);
      pick_format(*g, "json", {"json"});
      wft::InvoluteSpec spec = spec_from(o->common, lambda0_opt);
      if (o->omega_start >= 0.0) {
        // extend the curve so the window always fits
        const int needed = static_cast<int>(std::ceil(o->omega_start / (2.0 * M_PI))) + 1;
        spec.k_max = std::max(spec.k_max, needed);
      }
      const double offset = wft::eccentricity(spec, o->omega_start);
      JsonObject root = report_root(k);
      root.number("r0", spec.r0)
          .number("omega_start", o->omega_start)
          .number("offset", offset)
          .number("offset_over_r0", offset / spec.r0);
      emit_json(*g, root);
    });
  }
}

// ---------------------------------------------------------------- gravity

void add_gravity(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  struct Options {
    double m_a = 0.0, m_b = 0.0, r = 0.0;
  };
  auto o = std::make_shared<Options>();
  CLI::App* cmd = app.add_subcommand("gravity", "wave gravity force with the Newton oracle");
  cmd->add_option("--m-a", o->m_a, "first mass, kg")->required();
  cmd->add_option("--m-b", o->m_b, "second mass, kg")->required();
  cmd->add_option("--r", o->r, "separation, m")->required();
  cmd->callback([o, g] {
    const wft::Constants k = resolve_constants(*g);
    pick_format(*g, "json", {"json"});
    const auto rep = wft::wave_gravity_force(wft::MassPair::make(o->m_a, o->m_b, o->r, k), k);
    JsonObject root = report_root(k);
    root.number("m_a", rep.m_a)
        .number("m_b", rep.m_b)
        .number("r", rep.r)
        .number("lambda_a", rep.lambda_a)
        .number("lambda_b", rep.lambda_b)
        .number("t_g_a", rep.t_g_a)
        .number("t_g_b", rep.t_g_b)
        .number("N", rep.N)
        .number("base_component", rep.base_component)
        .number("force", rep.force)
        .number("newton", rep.newton)
        .number("ratio", rep.ratio)
        .number("rel_deviation", rep.rel_deviation);
    emit_json(*g, root);
  });
}

// ---------------------------------------------------------------- terminal

void add_terminal(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  struct Options {
    double lambda0 = 0.0;
    double mass = 0.0;
    std::string particle;
  };
  auto o = std::make_shared<Options>();
  CLI::App* cmd = app.add_subcommand("terminal", "terminal-velocity deficit for a mass");
  auto* lam = cmd->add_option("--lambda0", o->lambda0, "rest wavelength, m");
  auto* mass = cmd->add_option("--mass", o->mass, "rest mass, kg");
  cmd->add_option("--particle", o->particle, "electron | proton");
  cmd->callback([o, g, lam, mass] {
    const wft::Constants k = resolve_constants(*g);
    pick_format(*g, "json", {"json"});
    double lambda0 = o->lambda0;
    if (lam->count() == 0) {
      lambda0 =
          wft::rest_wavelength(mass_from_flags(o->particle, o->mass, mass->count() > 0), k);
    }
    const auto rep = wft::terminal_report(lambda0, k);
    JsonObject root = report_root(k);
    root.number("lambda0", rep.lambda0)
        .number("beta_deficit", rep.beta_deficit)
        .number("log10_beta_deficit", rep.log10_beta_deficit)
        .text("v_terminal_description", rep.v_terminal_description);
    emit_json(*g, root);
  });
}

// ---------------------------------------------------------------- fifth

void add_fifth(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  struct Options {
    double lambda_a = 0.0, lambda_b = 0.0;
    double m_a = 0.0, m_b = 0.0;
    double r = 0.0;
    double phi = 0.0;
  };
  auto o = std::make_shared<Options>();
  CLI::App* cmd =
      app.add_subcommand("fifth", "attraction/repulsion split of the corrected force law");
  auto* la = cmd->add_option("--lambda-a", o->lambda_a, "first wavelength, m");
  cmd->add_option("--lambda-b", o->lambda_b, "second wavelength, m");
  auto* ma = cmd->add_option("--m-a", o->m_a, "first mass, kg");
  cmd->add_option("--m-b", o->m_b, "second mass, kg");
  cmd->add_option("--r", o->r, "separation, m")->required();
  cmd->add_option("--phi", o->phi, "angle of view, rad");
  cmd->callback([o, g, la, ma] {
    const wft::Constants k = resolve_constants(*g);
    pick_format(*g, "json", {"json"});
    if ((la->count() > 0) == (ma->count() > 0)) {
      throw std::invalid_argument("give either --lambda-a/--lambda-b or --m-a/--m-b");
    }
    double lambda_a = o->lambda_a;
    double lambda_b = o->lambda_b;
    if (ma->count() > 0) {
      lambda_a = wft::rest_wavelength(o->m_a, k);
      lambda_b = wft::rest_wavelength(o->m_b, k);
    }
    const auto rep = wft::fifth_interaction_force(lambda_a, lambda_b, o->r, o->phi, k);
    JsonObject root = report_root(k);
    root.number("lambda_a", rep.lambda_a)
        .number("lambda_b", rep.lambda_b)
        .number("r", rep.r)
        .number("phi", rep.phi)
        .number("attraction", rep.attraction)
        .number("repulsion", rep.repulsion)
        .number("total", rep.total)
        .text("note", rep.note);
    emit_json(*g, root);
  });
}

// ---------------------------------------------------------------- maximass

void add_maximass(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  CLI::App* cmd = app.add_subcommand("maximass", "mass whose rest wavelength equals L");
  cmd->callback([g] {
    const wft::Constants k = resolve_constants(*g);
    pick_format(*g, "json", {"json"});
    JsonObject root = report_root(k);
    root.number("maximass", wft::maximass(k));
    emit_json(*g, root);
  });
}

// ---------------------------------------------------------------- decompose-n

void add_decompose(CLI::App& app, std::shared_ptr<GlobalOptions> g) {
  CLI::App* cmd = app.add_subcommand("decompose-n", "factorisation check of N_coeff");
  cmd->callback([g] {
    const wft::Constants k = resolve_constants(*g);
    pick_format(*g, "json", {"json"});
    const auto d = wft::decompose_N(k);
    char note[160];
    std::snprintf(note, sizeof note,
                  "alpha_inv^2 * 100^5 differs from the configured N_coeff by %.4f%%",
                  100.0 * std::abs(d.rel_difference));
    JsonObject root = report_root(k);
    root.number("n_coeff", d.n_coeff)
        .number("alpha_inv", d.alpha_inv)
        .number("reconstruction", d.reconstruction)
        .number("rel_difference", d.rel_difference)
        .number("implied_alpha_inv", d.implied_alpha_inv)
        .text("note", note);
    emit_json(*g, root);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wft-lab: wave-field formula laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  auto g = std::make_shared<GlobalOptions>();
  app.add_option("--constants", g->constants_path, "constants config file")
      ->envname("WFT_CONSTANTS");
  app.add_option("--output", g->output_path, "output path (default: stdout)");
  app.add_option("--format", g->format, "json | csv | obj (subcommand default otherwise)")
      ->check(CLI::IsMember({"json", "csv", "obj"}));

  add_lattice(app, g);
  add_doppler(app, g);
  add_momentum(app, g);
  add_energy(app, g);
  add_waves(app, g);
  add_deflect(app, g);
  add_compton(app, g);
  add_involute(app, g);
  add_gravity(app, g);
  add_terminal(app, g);
  add_fifth(app, g);
  add_maximass(app, g);
  add_decompose(app, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const wft::resource_error& e) {
    std::fprintf(stderr, "resource error: %s\n", e.what());
    return 4;
  } catch (const wft::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  }
  return 0;
}
