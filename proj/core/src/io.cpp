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

#include "metaframe/io.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "metaframe/error.hpp"

namespace metaframe {

namespace {

using nlohmann::json;

double exponent_from_json(const json &j, const char *key) {
  if (!j.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing exponent '") + key + "'");
  }
  const json &v = j.at(key);
  if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "infinity")) {
    return kInf;
  }
  if (!v.is_number()) {
    throw Error(ErrorCode::ParseError, std::string("exponent '") + key + "' is not a number");
  }
  return v.get<double>();
}

json exponent_to_json(double p) { return std::isinf(p) ? json("inf") : json(p); }

Weight1D weight1d_from_json(const json &j) {
  const std::string type = j.value("type", "constant");
  if (type == "constant") {
    return Weight1D::constant(j.value("c", 1.0));
  }
  if (type == "vs" || type == "polynomial") {
    return Weight1D::polynomial(j.at("s").get<double>());
  }
  if (type == "exp" || type == "exponential") {
    return Weight1D::exponential(j.at("a").get<double>());
  }
  throw Error(ErrorCode::ParseError, "unknown weight type '" + type + "'");
}

json weight1d_to_json(const Weight1D &w) {
  switch (w.kind()) {
    case Weight1D::Kind::Constant:
      return {{"type", "constant"}, {"c", w.parameter()}};
    case Weight1D::Kind::Polynomial:
      return {{"type", "vs"}, {"s", w.parameter()}};
    case Weight1D::Kind::Exponential:
      return {{"type", "exp"}, {"a", w.parameter()}};
  }
  return {};
}

}  // namespace

void write_signal_csv(std::ostream &os, const Signal &s) {
  os << "x,re,im\n" << std::setprecision(17);
  for (std::size_t k = 0; k < s.grid.size(); ++k) {
    const cdouble v = s.values[static_cast<Eigen::Index>(k)];
    os << s.grid.node(k) << ',' << v.real() << ',' << v.imag() << '\n';
  }
}

Signal read_signal_csv(std::istream &is) {
  std::string line;
  std::vector<double> xs;
  std::vector<cdouble> vs;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("x,", 0) == 0) {
      continue;
    }
    std::istringstream row(line);
    std::string cell;
    std::vector<double> cells;
    while (std::getline(row, cell, ',')) {
      try {
        cells.push_back(std::stod(cell));
      } catch (const std::exception &) {
        throw Error(ErrorCode::ParseError, "bad number '" + cell + "' in signal CSV");
      }
    }
    if (cells.size() < 2 || cells.size() > 3) {
      throw Error(ErrorCode::ParseError, "signal CSV rows need x,re[,im]");
    }
    xs.push_back(cells[0]);
    vs.emplace_back(cells[1], cells.size() == 3 ? cells[2] : 0.0);
  }
  if (xs.size() < 2) {
    throw Error(ErrorCode::ParseError, "signal CSV has fewer than two samples");
  }
  const double h = xs[1] - xs[0];
  const Grid1D grid(xs.size(), h * static_cast<double>(xs.size()));
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (std::abs(xs[k] - grid.node(k)) > 1e-9 * std::max(1.0, grid.length())) {
      throw Error(ErrorCode::InvalidGrid,
                  "signal CSV abscissae are not the centered grid (k - n/2) h");
    }
  }
  ComplexVector v(static_cast<Eigen::Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) {
    v[static_cast<Eigen::Index>(k)] = vs[k];
  }
  return Signal(grid, std::move(v));
}

void write_tfarray_csv(std::ostream &os, const TFArray &f, bool with_abs) {
  os << (with_abs ? "x,xi,re,im,abs\n" : "x,xi,re,im\n") << std::setprecision(17);
  for (Eigen::Index m = 0; m < f.values.rows(); ++m) {
    const double x = f.grid.time.node(static_cast<std::size_t>(m));
    for (Eigen::Index k = 0; k < f.values.cols(); ++k) {
      const cdouble v = f.values(m, k);
      os << x << ',' << f.grid.freq.node(static_cast<std::size_t>(k)) << ',' << v.real()
         << ',' << v.imag();
      if (with_abs) {
        os << ',' << std::abs(v);
      }
      os << '\n';
    }
  }
}

json matrix_to_json(const Matrix &m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json &j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw Error(ErrorCode::ParseError, "matrix must be a nested row-major array");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json &row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(ErrorCode::ParseError, "matrix rows have different lengths");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json &v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) {
        throw Error(ErrorCode::ParseError, "matrix entry is not a number");
      }
      m(r, c) = v.get<double>();
    }
  }
  return m;
}

json factor_to_json(const FactorPair &f) {
  return {{"d", f.e.d()}, {"C", matrix_to_json(f.chirp)}, {"E", matrix_to_json(f.e.matrix())}};
}

FactorPair factor_from_json(const json &j) {
  if (!j.contains("E")) {
    throw Error(ErrorCode::ParseError, "factorization needs an \"E\" matrix");
  }
  BlockMatrix2d e(matrix_from_json(j.at("E")));
  Matrix c = j.contains("C") ? matrix_from_json(j.at("C"))
                             : Matrix::Zero(2 * e.d(), 2 * e.d());
  if (j.contains("d") && j.at("d").get<Index>() != e.d()) {
    throw Error(ErrorCode::DimensionMismatch, "\"d\" disagrees with the size of E");
  }
  return FactorPair{std::move(c), std::move(e)};
}

json lattice_to_json(const Lattice &l) {
  return {{"a", l.a()}, {"b", l.b()}, {"radius", l.radius()}};
}

Lattice lattice_from_json(const json &j) {
  try {
    return Lattice(j.at("a").get<double>(), j.at("b").get<double>(),
                   j.at("radius").get<double>());
  } catch (const json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("lattice: ") + e.what());
  }
}

json bounds_to_json(const FrameBounds &b) {
  return {{"A", b.lower},
          {"B", b.upper},
          {"frame", b.frame()},
          {"method", b.method == BoundsMethod::Eigen ? "eigen" : "sum-estimate"}};
}

json report_to_json(const TheoremMainReport &r) {
  json out = {{"A", r.metaplectic.lower},
              {"B", r.metaplectic.upper},
              {"classical_A", r.classical.lower},
              {"classical_B", r.classical.upper},
              {"ratio", r.observed_ratio},
              {"observed_ratio", r.observed_ratio},
              {"expected_ratio", r.expected_ratio},
              {"frame", r.metaplectic.frame()},
              {"atoms", r.atoms},
              {"modulus_residual", r.modulus_residual},
              {"vector_residual", r.vector_residual},
              {"bounds_checked", r.bounds_checked},
              {"passed", r.passed()}};
  out["lower_ratio"] = r.lower_ratio ? json(*r.lower_ratio) : json(nullptr);
  if (!r.warning.empty()) {
    out["warning"] = r.warning;
  }
  return out;
}

json normspec_to_json(const NormSpec &s) {
  json w;
  switch (s.weight.kind()) {
    case Weight::Kind::Constant:
      w = {{"type", "constant"}, {"c", s.weight.parameter()}};
      break;
    case Weight::Kind::Polynomial:
      w = {{"type", "vs"}, {"s", s.weight.parameter()}};
      break;
    case Weight::Kind::Exponential:
      w = {{"type", "exp"}, {"a", s.weight.parameter()}};
      break;
    case Weight::Kind::Product:
      w = {{"type", "product"},
           {"time", weight1d_to_json(s.weight.time_factor())},
           {"freq", weight1d_to_json(s.weight.freq_factor())}};
      break;
  }
  return {{"p", exponent_to_json(s.p)}, {"q", exponent_to_json(s.q)}, {"weight", w}};
}

NormSpec normspec_from_json(const json &j) {
  NormSpec s;
  try {
    s.p = exponent_from_json(j, "p");
    s.q = exponent_from_json(j, "q");
    if (j.contains("weight")) {
      const json &w = j.at("weight");
      const std::string type = w.value("type", "constant");
      if (type == "constant") {
        s.weight = Weight::constant(w.value("c", 1.0));
      } else if (type == "vs" || type == "polynomial") {
        s.weight = Weight::polynomial(w.at("s").get<double>());
      } else if (type == "exp" || type == "exponential") {
        s.weight = Weight::exponential(w.at("a").get<double>());
      } else if (type == "product") {
        s.weight = Weight::product(weight1d_from_json(w.at("time")),
                                   weight1d_from_json(w.at("freq")));
      } else {
        throw Error(ErrorCode::ParseError, "unknown weight type '" + type + "'");
      }
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("norm spec: ") + e.what());
  }
  s.validate();
  return s;
}

json equivalence_to_json(const EquivalenceReport &r) {
  return {{"min", r.min}, {"max", r.max}, {"spread", r.spread}, {"ratios", r.ratios}};
}

}  // namespace metaframe
