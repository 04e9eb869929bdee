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

#include <sstream>

#include "metaframe/io.hpp"
#include "metaframe/tfr.hpp"
#include "test_util.hpp"

namespace metaframe {
namespace {

using nlohmann::json;
using testing::mat;

TEST(SignalCsv, RoundTrip) {
  const Signal s = modulate(Window::hermite(1), 0.7).sample(Grid1D(64, 8.0));
  std::stringstream ss;
  write_signal_csv(ss, s);
  EXPECT_EQ(ss.str().substr(0, 8), "x,re,im\n");
  const Signal back = read_signal_csv(ss);
  EXPECT_TRUE(back.grid == s.grid);
  EXPECT_EQ(back.values, s.values);
}

TEST(SignalCsv, RealOnlyRowsAndErrors) {
  std::stringstream ok;
  ok << "x,re\n";
  const Grid1D g(16, 4.0);
  for (std::size_t k = 0; k < g.size(); ++k) {
    ok << g.node(k) << ",1\n";
  }
  EXPECT_EQ(read_signal_csv(ok).values, ComplexVector::Ones(16));

  std::stringstream bad_number("x,re,im\n-1,abc,0\n0,1,0\n");
  EXPECT_ERROR_CODE(read_signal_csv(bad_number), ParseError);
  std::stringstream too_short("x,re,im\n0,1,0\n");
  EXPECT_ERROR_CODE(read_signal_csv(too_short), ParseError);
  std::stringstream off_grid;
  for (int k = 0; k < 16; ++k) {
    off_grid << k * 0.25 << ",1,0\n";  // not centered
  }
  EXPECT_ERROR_CODE(read_signal_csv(off_grid), InvalidGrid);
}

TEST(TFArrayCsv, Layout) {
  const TFGrid tf{Grid1D(16, 4.0), Grid1D(16, 4.0)};
  ComplexMatrix v = ComplexMatrix::Zero(16, 16);
  v(0, 1) = cdouble(3.0, -4.0);
  std::stringstream plain;
  write_tfarray_csv(plain, TFArray(tf, v));
  std::string header;
  std::string first;
  std::string second;
  std::getline(plain, header);
  std::getline(plain, first);
  std::getline(plain, second);
  EXPECT_EQ(header, "x,xi,re,im");
  EXPECT_EQ(second, "-2,-1.75,3,-4");
  std::stringstream with_abs;
  write_tfarray_csv(with_abs, TFArray(tf, v), true);
  std::getline(with_abs, header);
  std::getline(with_abs, first);
  std::getline(with_abs, second);
  EXPECT_EQ(header, "x,xi,re,im,abs");
  EXPECT_EQ(second, "-2,-1.75,3,-4,5");
}

TEST(Json, MatrixRoundTrip) {
  const Matrix m = mat(2, 3, {1, 2.5, -3, 0, 1e-7, 4});
  const json j = matrix_to_json(m);
  EXPECT_EQ(j.dump(), "[[1.0,2.5,-3.0],[0.0,1e-07,4.0]]");
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_ERROR_CODE(matrix_from_json(json::parse("[[1,2],[3]]")), ParseError);
  EXPECT_ERROR_CODE(matrix_from_json(json::parse("[[1,\"x\"]]")), ParseError);
  EXPECT_ERROR_CODE(matrix_from_json(json::parse("3")), ParseError);
}

TEST(Json, FactorRoundTrip) {
  const FactorPair f{mat(2, 2, {0.3, 0.1, 0.1, -0.2}), BlockMatrix2d(mat(2, 2, {0, 1, -1, 1}))};
  const json j = factor_to_json(f);
  EXPECT_EQ(j.at("d"), 1);
  const FactorPair back = factor_from_json(j);
  EXPECT_EQ(back.chirp, f.chirp);
  EXPECT_EQ(back.e.matrix(), f.e.matrix());
  EXPECT_ERROR_CODE(factor_from_json(json::parse(R"({"C": [[0]]})")), ParseError);
  EXPECT_ERROR_CODE(factor_from_json(json::parse(R"({"d": 2, "E": [[0, 1], [-1, 1]]})")),
                    DimensionMismatch);
}

TEST(Json, Lattice) {
  const Lattice l = lattice_from_json(json::parse(R"({"a": 1, "b": 0.5, "radius": 6})"));
  EXPECT_EQ(l.size(), 325u);
  EXPECT_EQ(lattice_to_json(l), json::parse(R"({"a": 1.0, "b": 0.5, "radius": 6.0})"));
  EXPECT_ERROR_CODE(lattice_from_json(json::parse(R"({"a": 1})")), ParseError);
}

TEST(Json, Reports) {
  FrameBounds b;
  b.lower = 0.5;
  b.upper = 2.0;
  const json jb = bounds_to_json(b);
  EXPECT_EQ(jb.at("frame"), true);
  EXPECT_EQ(jb.at("method"), "eigen");

  TheoremMainReport r;
  r.atoms = 4;
  r.expected_ratio = 0.25;
  r.warning = "few points";
  const json jr = report_to_json(r);
  for (const char *key : {"A", "B", "ratio", "expected_ratio", "observed_ratio", "frame", "atoms",
                          "passed", "lower_ratio", "warning"}) {
    EXPECT_TRUE(jr.contains(key)) << key;
  }
  EXPECT_TRUE(jr.at("lower_ratio").is_null());
  EXPECT_EQ(jr.at("passed"), true);

  EquivalenceReport e{{1.0, 2.0}, 1.0, 2.0, 2.0};
  EXPECT_EQ(equivalence_to_json(e).at("spread"), 2.0);
}

TEST(Json, NormSpecRoundTrip) {
  const NormSpec s =
      normspec_from_json(json::parse(R"({"p": 1, "q": "inf", "weight": {"type": "vs", "s": 2}})"));
  EXPECT_EQ(s.p, 1.0);
  EXPECT_EQ(s.q, kInf);
  EXPECT_EQ(s.weight.kind(), Weight::Kind::Polynomial);
  const NormSpec back = normspec_from_json(normspec_to_json(s));
  EXPECT_EQ(back.q, kInf);
  EXPECT_EQ(back.weight.parameter(), 2.0);

  const NormSpec prod = normspec_from_json(json::parse(
      R"({"p": 2, "q": 2, "weight": {"type": "product", "time": {"type": "vs", "s": 1},
          "freq": {"type": "exp", "a": 0.5}}})"));
  EXPECT_EQ(prod.weight.kind(), Weight::Kind::Product);
  const NormSpec prod_back = normspec_from_json(normspec_to_json(prod));
  EXPECT_DOUBLE_EQ(prod_back.weight(1.0, 2.0), prod.weight(1.0, 2.0));

  EXPECT_ERROR_CODE(normspec_from_json(json::parse(R"({"p": 2})")), ParseError);
  EXPECT_ERROR_CODE(normspec_from_json(json::parse(R"({"p": 0, "q": 2})")), InvalidArgument);
  EXPECT_ERROR_CODE(
      normspec_from_json(json::parse(R"({"p": 2, "q": 2, "weight": {"type": "gauss"}})")),
      ParseError);
}

}  // namespace
}  // namespace metaframe
