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

#include <iosfwd>

#include <nlohmann/json.hpp>

#include "metaframe/frames.hpp"
#include "metaframe/grid.hpp"
#include "metaframe/spaces.hpp"
#include "metaframe/symplectic.hpp"

namespace metaframe {

/// `x,re,im` with a header line. Reading requires a uniform centered grid.
void write_signal_csv(std::ostream &os, const Signal &s);
Signal read_signal_csv(std::istream &is);

/// `x,xi,re,im[,abs]`, time-major.
void write_tfarray_csv(std::ostream &os, const TFArray &f, bool with_abs = false);

/// Nested row-major arrays.
nlohmann::json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const nlohmann::json &j);

/// {"d": .., "C": [[..]], "E": [[..]]}
nlohmann::json factor_to_json(const FactorPair &f);
FactorPair factor_from_json(const nlohmann::json &j);

/// {"a": .., "b": .., "radius": ..}
nlohmann::json lattice_to_json(const Lattice &l);
Lattice lattice_from_json(const nlohmann::json &j);

/// {"A", "B", "frame"}
nlohmann::json bounds_to_json(const FrameBounds &b);
/// {"A", "B", "ratio", "expected_ratio", "observed_ratio", "frame", "atoms", ...}
nlohmann::json report_to_json(const TheoremMainReport &r);

/// {"p": .., "q": .., "weight": {"type": "vs", "s": ..}}; exponents may be
/// the string "inf".
nlohmann::json normspec_to_json(const NormSpec &s);
NormSpec normspec_from_json(const nlohmann::json &j);

nlohmann::json equivalence_to_json(const EquivalenceReport &r);

}  // namespace metaframe
