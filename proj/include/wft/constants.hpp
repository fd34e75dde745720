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

#include <iosfwd>
#include <string>

namespace wft {

/// Registry of the physical constants every formula draws from, in SI units.
///
/// Defaults are CODATA 2018 for h, c (exact by definition) and G, plus the
/// model parameters: the terminal discrete length L, the wavefront-count
/// coefficient N_coeff (the effective wavefront number is N = N_coeff / L)
/// and the inverse fine-structure constant used by the N decomposition.
///
/// The only way to override a value is the constants config file: flat
/// UTF-8 text, one `name = value` pair per line, `#` starts a comment,
/// keys restricted to {h, c, G, L, N_coeff, alpha_inv}. Absent keys keep
/// their defaults. Registries are plain values; load once, pass around
/// by const reference.
struct Constants {
  double h = 6.62607015e-34;      ///< action quantum, J s
  double c = 299792458.0;         ///< light speed, m/s
  double G = 6.67430e-11;         ///< Newtonian constant, m^3 kg^-1 s^-2
  double L = 4.884356e-84;        ///< terminal discrete length, m
  double N_coeff = 1.8777557e14;  ///< dimensionless coefficient of N = N_coeff / L
  double alpha_inv = 137.024;     ///< inverse fine-structure constant
};

/// Default (unmodified) registry.
const Constants& default_constants();

/// Parses a constants config stream. Throws std::invalid_argument on
/// malformed lines, unknown keys, unparsable or non-positive values.
Constants parse_constants(std::istream& in);

/// Reads a constants config file. Throws std::invalid_argument if the file
/// cannot be opened, otherwise behaves like parse_constants.
Constants load_constants(const std::string& path);

}  // namespace wft
