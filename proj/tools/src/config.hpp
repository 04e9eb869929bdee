// Copyright 2026 The metaframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "metaframe/frames.hpp"
#include "metaframe/grid.hpp"
#include "metaframe/spaces.hpp"
#include "metaframe/symplectic.hpp"
#include "metaframe/window.hpp"

namespace metaframe::cli {

/// Everything a command needs. Loaded from a "schema":"1" JSON file, then
/// overridden by command-line flags.
struct RunConfig {
  std::string preset = "stft";          // stft | tau:<t> | custom
  std::optional<FactorPair> custom;     // C, E for the custom preset
  std::size_t n = 256;
  double length = 16.0;
  double a = 1.0;
  double b = 0.5;
  double radius = 8.0;
  NormSpec norm;
  std::string window = "gaussian";      // analysis window g
  std::string signal_window = "gaussian";
  std::string signal_path;              // CSV, overrides signal_window
  std::string out_path;

  /// Throws ParseError on unknown keys or a wrong schema version and
  /// NotRightRegular for a custom E that is not right-regular.
  static RunConfig from_json(const nlohmann::json &j);
  static RunConfig load(const std::string &path);

  WignerFactorization factorization() const;
  Grid1D grid() const { return Grid1D(n, length); }
  TFGrid tf() const { return TFGrid{grid(), grid().dual()}; }
  Lattice lattice() const { return Lattice(a, b, radius); }
  /// The signal f: the CSV if given, else signal_window.
  Window signal() const;
};

/// Window descriptors: gaussian[:sigma], hermite:<m>[:sigma],
/// chirp:<sigma>:<c>, shifted:<x>:<xi> (unit Gaussian moved to (x, xi)),
/// zero.
Window parse_window(std::string_view spec);

/// stft, tau:<t>; custom needs the config's C and E.
WignerFactorization parse_preset(std::string_view preset,
                                 const std::optional<FactorPair> &custom);

}  // namespace metaframe::cli
