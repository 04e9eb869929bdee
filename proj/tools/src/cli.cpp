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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "config.hpp"
#include "metaframe/frames.hpp"
#include "metaframe/io.hpp"
#include "metaframe/spaces.hpp"
#include "metaframe/tfr.hpp"
#include "verify.hpp"

namespace metaframe::cli {

namespace {

using nlohmann::json;

struct Overrides {
  std::string config_path;
  std::optional<std::string> preset;
  std::optional<std::string> window;
  std::optional<std::string> signal;
  std::optional<std::string> signal_window;
  std::optional<std::size_t> n;
  std::optional<double> length;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> radius;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> s;
  std::optional<std::string> out;
  std::string kind = "metaplectic";
  bool dump_modulus = false;
  std::string suite;
  std::string matrix_path;
  std::string norm_kind = "modulation";
};

RunConfig resolve(const Overrides &o) {
  RunConfig c = o.config_path.empty() ? RunConfig{} : RunConfig::load(o.config_path);
  if (o.preset) c.preset = *o.preset;
  if (o.window) c.window = *o.window;
  if (o.signal) c.signal_path = *o.signal;
  if (o.signal_window) c.signal_window = *o.signal_window;
  if (o.n) c.n = *o.n;
  if (o.length) c.length = *o.length;
  if (o.a) c.a = *o.a;
  if (o.b) c.b = *o.b;
  if (o.radius) c.radius = *o.radius;
  if (o.p) c.norm.p = *o.p;
  if (o.q) c.norm.q = *o.q;
  if (o.s) c.norm.weight = Weight::polynomial(*o.s);
  if (o.out) c.out_path = *o.out;
  c.norm.validate();
  return c;
}

std::ofstream open_out(const std::string &path) {
  std::ofstream f(path);
  if (!f) {
    throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  }
  return f;
}

AtomKind atom_kind(const Overrides &o, const RunConfig &c) {
  if (o.kind == "classical") {
    return AtomKind::classical();
  }
  if (o.kind == "metaplectic") {
    return AtomKind::metaplectic(c.factorization());
  }
  throw Error(ErrorCode::InvalidArgument, "--kind must be classical or metaplectic");
}

int cmd_analyze(const Overrides &o, std::ostream &out) {
  const RunConfig c = resolve(o);
  const TFArray w = wigner_metaplectic(c.signal(), parse_window(c.window), c.factorization(), c.tf());
  Eigen::Index im = 0;
  Eigen::Index ik = 0;
  const double peak = w.values.cwiseAbs().maxCoeff(&im, &ik);
  const cdouble v = w.values(im, ik);
  if (!c.out_path.empty()) {
    std::ofstream f = open_out(c.out_path);
    write_tfarray_csv(f, w, o.dump_modulus);
  }
  out << json{{"energy", w.norm() * w.norm()},
              {"max_abs", peak},
              {"argmax", {{"x", w.grid.time.node(static_cast<std::size_t>(im))},
                          {"xi", w.grid.freq.node(static_cast<std::size_t>(ik))}}},
              {"value", {{"re", v.real()}, {"im", v.imag()}}}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_frame_bounds(const Overrides &o, std::ostream &out) {
  const RunConfig c = resolve(o);
  const GaborSystem sys = build_system(parse_window(c.window), c.lattice(), atom_kind(o, c), c.grid());
  json j = bounds_to_json(frame_bounds(sys));
  j["atoms"] = sys.atom_count();
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_theorem_main(const Overrides &o, std::ostream &out) {
  const RunConfig c = resolve(o);
  const TheoremMainReport r =
      theorem_main_check(c.factorization(), parse_window(c.window), c.lattice(), c.grid());
  out << report_to_json(r).dump() << '\n';
  return r.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const Overrides &o, std::ostream &out, std::ostream &err) {
  const RunConfig c = resolve(o);
  const auto &names = verify_suites();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
    err << "unknown suite '" << o.suite << "'; expected one of:";
    for (const auto &n : names) {
      err << ' ' << n;
    }
    err << '\n';
    return kExitUsage;
  }
  const auto checks = run_suite(o.suite, c);
  print_checks(out, checks);
  for (const auto &ch : checks) {
    if (!ch.pass) {
      err << "failed: " << ch.suite << '/' << ch.name << '\n';
      return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

int cmd_reconstruct(const Overrides &o, std::ostream &out) {
  const RunConfig c = resolve(o);
  const GaborSystem sys = build_system(parse_window(c.window), c.lattice(), atom_kind(o, c), c.grid());
  const Reconstruction r = frame_reconstruct(sys, c.signal());
  if (!c.out_path.empty()) {
    std::ofstream f = open_out(c.out_path);
    write_signal_csv(f, r.signal);
  }
  out << json{{"relative_error", r.relative_error}, {"atoms", sys.atom_count()}}.dump() << '\n';
  return kExitOk;
}

int cmd_dual(const Overrides &o, std::ostream &out) {
  const RunConfig c = resolve(o);
  const GaborSystem sys = build_system(parse_window(c.window), c.lattice(), atom_kind(o, c), c.grid());
  const Window gamma = metaplectic_dual(sys);
  if (!c.out_path.empty()) {
    std::ofstream f = open_out(c.out_path);
    write_signal_csv(f, gamma.sample(c.grid()));
  }
  json j = bounds_to_json(frame_bounds(sys));
  j["dual_norm"] = gamma.sample(c.grid()).norm();
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_factor(const Overrides &o, std::ostream &out) {
  std::ifstream in(o.matrix_path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open matrix '" + o.matrix_path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("matrix file: ") + e.what());
  }
  const Matrix a = matrix_from_json(j.is_object() ? j.at("A") : j);
  const auto pair = try_factor(SymplecticMatrix(a));
  if (!pair) {
    out << json{{"decomposable", false}, {"message", "not decomposable"}}.dump() << '\n';
    return kExitOk;
  }
  json r = factor_to_json(*pair);
  r["decomposable"] = true;
  out << r.dump() << '\n';
  return kExitOk;
}

int cmd_norm(const Overrides &o, std::ostream &out) {
  const RunConfig c = resolve(o);
  const Window g = parse_window(c.window);
  const Window f = c.signal();
  double value = 0.0;
  if (o.norm_kind == "modulation") {
    value = modulation_norm(f, g, c.norm, c.tf());
  } else if (o.norm_kind == "wa") {
    value = mixed_norm(wigner_metaplectic(f, g, c.factorization(), c.tf()), c.norm);
  } else if (o.norm_kind == "amalgam") {
    AmalgamSpec spec;
    spec.p = c.norm.p;
    spec.q = c.norm.q;
    if (o.s) {
      spec.m1 = Weight1D::polynomial(*o.s);
      spec.m2 = Weight1D::polynomial(*o.s);
    }
    value = amalgam_norm(f, g, spec, c.tf());
  } else {
    throw Error(ErrorCode::InvalidArgument, "--kind must be modulation, wa or amalgam");
  }
  out << json{{"norm", value}, {"spec", normspec_to_json(c.norm)}, {"kind", o.norm_kind}}.dump()
      << '\n';
  return kExitOk;
}

void add_common(CLI::App *cmd, Overrides &o) {
  cmd->add_option("--config", o.config_path, "RunConfig JSON (\"schema\": \"1\")");
  cmd->add_option("--preset", o.preset, "stft | tau:<t> | custom");
  cmd->add_option("--window", o.window,
                  "analysis window: gaussian[:s] | hermite:<m>[:s] | chirp:<s>:<c> | "
                  "shifted:<x>:<xi> | zero");
  cmd->add_option("--signal", o.signal, "signal CSV (x,re,im) on a centered grid");
  cmd->add_option("--signal-window", o.signal_window, "analytic signal, same syntax as --window");
  cmd->add_option("--n", o.n, "grid size (power of two >= 16)");
  cmd->add_option("--length", o.length, "grid extent L");
  cmd->add_option("--out", o.out, "output file");
}

void add_lattice(CLI::App *cmd, Overrides &o) {
  cmd->add_option("--a", o.a, "lattice time step");
  cmd->add_option("--b", o.b, "lattice frequency step");
  cmd->add_option("--radius", o.radius, "lattice truncation radius");
  cmd->add_option("--kind", o.kind, "classical | metaplectic (default)");
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAFrame:
      return kExitNotAFrame;
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::NotRightRegular:
    case ErrorCode::TauDegenerate:
    case ErrorCode::InvalidGrid:
    case ErrorCode::NotSymmetric:
    case ErrorCode::NotSymplectic:
    case ErrorCode::OddDimension:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::SingularMatrix:
    case ErrorCode::SingularSchur:
    case ErrorCode::NotTotallyDecomposable:
    case ErrorCode::LengthMismatch:
    case ErrorCode::ZeroWindow:
    case ErrorCode::WeightConditionFailed:
    case ErrorCode::OffGridShift:
      return kExitUsage;
    default:
      return kExitNumerical;
  }
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"metaframe: metaplectic Wigner distributions and Gabor frames"};
  app.require_subcommand(1);
  Overrides o;

  auto *analyze = app.add_subcommand("analyze", "sample W_A(f, g) on the TF grid");
  add_common(analyze, o);
  analyze->add_flag("--dump-modulus", o.dump_modulus, "add an abs column to the CSV");

  auto *bounds = app.add_subcommand("frame-bounds", "frame bounds of a (metaplectic) Gabor system");
  add_common(bounds, o);
  add_lattice(bounds, o);

  auto *theorem = app.add_subcommand("theorem-main", "metaplectic-to-classical frame transfer report");
  add_common(theorem, o);
  add_lattice(theorem, o);

  auto *verify = app.add_subcommand("verify", "run an invariant suite");
  add_common(verify, o);
  verify->add_option("suite", o.suite, "moyal | atoms | factor | covariance | frames | norms | all")
      ->required();

  auto *reconstruct = app.add_subcommand("reconstruct", "frame expansion with the dual window");
  add_common(reconstruct, o);
  add_lattice(reconstruct, o);

  auto *dual = app.add_subcommand("dual", "canonical (metaplectic) dual window");
  add_common(dual, o);
  add_lattice(dual, o);

  auto *factor = app.add_subcommand("factor", "split a symplectic matrix into (C, E)");
  factor->add_option("--matrix", o.matrix_path, "JSON nested array or {\"A\": ...}")->required();

  auto *norm = app.add_subcommand("norm", "modulation, Wiener amalgam or W_A mixed norm");
  add_common(norm, o);
  norm->add_option("--p", o.p, "inner exponent (inf allowed)");
  norm->add_option("--q", o.q, "outer exponent (inf allowed)");
  norm->add_option("--s", o.s, "polynomial weight exponent");
  norm->add_option("--kind", o.norm_kind, "modulation (default) | amalgam | wa");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*bounds) return cmd_frame_bounds(o, out);
    if (*theorem) return cmd_theorem_main(o, out);
    if (*verify) return cmd_verify(o, out, err);
    if (*reconstruct) return cmd_reconstruct(o, out);
    if (*dual) return cmd_dual(o, out);
    if (*factor) return cmd_factor(o, out);
    if (*norm) return cmd_norm(o, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace metaframe::cli
