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

#include "config.hpp"

#include <fstream>
#include <set>
#include <vector>

#include "metaframe/error.hpp"
#include "metaframe/io.hpp"

namespace metaframe::cli {

namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

double to_double(std::string_view s, std::string_view what) {
  try {
    std::size_t used = 0;
    const std::string str(s);
    const double v = std::stod(str, &used);
    if (used == str.size()) {
      return v;
    }
  } catch (const std::exception &) {
  }
  throw Error(ErrorCode::ParseError, "bad number '" + std::string(s) + "' in " + std::string(what));
}

template <typename T>
T get(const json &j, const char *key, T fallback) {
  if (!j.contains(key)) {
    return fallback;
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("config key '") + key + "': " + e.what());
  }
}

void reject_unknown(const json &j, const std::set<std::string> &allowed, const std::string &where) {
  for (const auto &[key, value] : j.items()) {
    if (!allowed.count(key)) {
      throw Error(ErrorCode::ParseError, "unknown key '" + key + "' in " + where);
    }
  }
}

}  // namespace

RunConfig RunConfig::from_json(const json &j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::ParseError, "config must be a JSON object");
  }
  if (!j.contains("schema") || j.at("schema") != "1") {
    throw Error(ErrorCode::ParseError, "config needs \"schema\": \"1\"");
  }
  reject_unknown(j,
                 {"schema", "d", "preset", "C", "E", "grid", "lattice", "norm", "window",
                  "signal", "signal_window", "out"},
                 "config");
  if (get<int>(j, "d", 1) != 1) {
    throw Error(ErrorCode::ParseError, "numeric commands support d = 1 only");
  }
  RunConfig c;
  c.preset = get<std::string>(j, "preset", c.preset);
  if (j.contains("E")) {
    FactorPair f = factor_from_json(j);
    if (!is_right_regular(f.e)) {
      throw Error(ErrorCode::NotRightRegular, "config E is not right-regular");
    }
    c.custom = std::move(f);
    if (!j.contains("preset")) {
      c.preset = "custom";
    }
  }
  if (j.contains("grid")) {
    const json &g = j.at("grid");
    reject_unknown(g, {"n", "length"}, "grid");
    c.n = get<std::size_t>(g, "n", c.n);
    c.length = get<double>(g, "length", c.length);
  }
  if (j.contains("lattice")) {
    const json &l = j.at("lattice");
    reject_unknown(l, {"a", "b", "radius"}, "lattice");
    c.a = get<double>(l, "a", c.a);
    c.b = get<double>(l, "b", c.b);
    c.radius = get<double>(l, "radius", c.radius);
  }
  if (j.contains("norm")) {
    c.norm = normspec_from_json(j.at("norm"));
  }
  c.window = get<std::string>(j, "window", c.window);
  c.signal_window = get<std::string>(j, "signal_window", c.signal_window);
  c.signal_path = get<std::string>(j, "signal", c.signal_path);
  c.out_path = get<std::string>(j, "out", c.out_path);
  // Fail early on malformed pieces rather than mid-computation.
  (void)c.grid();
  (void)c.factorization();
  (void)parse_window(c.window);
  return c;
}

RunConfig RunConfig::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open config '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::ParseError, "config '" + path + "': " + e.what());
  }
  return from_json(j);
}

WignerFactorization RunConfig::factorization() const { return parse_preset(preset, custom); }

Window RunConfig::signal() const {
  if (signal_path.empty()) {
    return parse_window(signal_window);
  }
  std::ifstream in(signal_path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open signal '" + signal_path + "'");
  }
  return Window::sampled(read_signal_csv(in));
}

Window parse_window(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view kind = parts[0];
  auto arg = [&](std::size_t i, double fallback) {
    return i < parts.size() ? to_double(parts[i], spec) : fallback;
  };
  if (kind == "gaussian" && parts.size() <= 2) {
    return Window::gaussian(arg(1, 1.0));
  }
  if (kind == "hermite" && parts.size() >= 2 && parts.size() <= 3) {
    return Window::hermite(static_cast<int>(arg(1, 0.0)), arg(2, 1.0));
  }
  if (kind == "chirp" && parts.size() == 3) {
    return Window::chirped_gaussian(arg(1, 1.0), arg(2, 0.0));
  }
  if (kind == "shifted" && parts.size() == 3) {
    return modulate(translate(Window::gaussian(), arg(1, 0.0)), arg(2, 0.0));
  }
  if (kind == "zero" && parts.size() == 1) {
    return scale(Window::gaussian(), 0.0);
  }
  throw Error(ErrorCode::ParseError, "unknown window '" + std::string(spec) + "'");
}

WignerFactorization parse_preset(std::string_view preset,
                                 const std::optional<FactorPair> &custom) {
  if (preset == "stft") {
    return stft_factorization();
  }
  if (preset.rfind("tau:", 0) == 0) {
    return tau_factorization(to_double(preset.substr(4), preset));
  }
  if (preset == "custom") {
    if (!custom) {
      throw Error(ErrorCode::ParseError, "preset 'custom' needs C and E in the config");
    }
    return WignerFactorization(custom->chirp, custom->e);
  }
  throw Error(ErrorCode::ParseError, "unknown preset '" + std::string(preset) + "'");
}

}  // namespace metaframe::cli
