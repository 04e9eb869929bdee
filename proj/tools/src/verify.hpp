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

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace metaframe::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// moyal, atoms, factor, covariance, frames, norms, all.
const std::vector<std::string> &verify_suites();

/// Runs one suite (or "all"). Throws ParseError for an unknown name.
std::vector<CheckResult> run_suite(const std::string &suite, const RunConfig &config);

/// One JSON object per line.
void print_checks(std::ostream &os, const std::vector<CheckResult> &checks);

}  // namespace metaframe::cli
