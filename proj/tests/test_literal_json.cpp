#include "svlie/catalog.hpp"
#include "svlie/json_io.hpp"
#include "svlie/literal.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace svlie;

namespace {

ParseDiagnostic diagnostic_of(const char *text) {
  try {
    parse_element(text);
  } catch (const ParseError &e) {
    return e.diagnostic();
  }
  ADD_FAILURE() << "'" << text << "' parsed";
  return {};
}

} // namespace

// --- element literals -------------------------------------------------------

TEST(Literal, ParsesAndPrintsCanonically) {
  EXPECT_EQ(format(parse_element("L[2] + 3*M[-1] - 1/2*c")), "L[2] + 3*M[-1] - 1/2*c");
  EXPECT_EQ(format(parse_element("  -c+L[0] ")), "L[0] - c");
  EXPECT_EQ(format(parse_element("Y[-3/2] + Y[-3/2]")), "2*Y[-3/2]");
  EXPECT_EQ(format(parse_element("4/6*M[1]")), "2/3*M[1]");
  EXPECT_EQ(format(parse_element("L[1] - L[1]")), "0");
  EXPECT_TRUE(parse_element("0").is_zero());
}

TEST(Literal, TensorForms) {
  const Tensor2 t = parse_tensor2("2*L[1] (x) c - M[0] (x) Y[1/2]");
  EXPECT_EQ(t.coeff({L(1), central()}), 2);
  EXPECT_EQ(format(t), "2*L[1] (x) c - M[0] (x) Y[1/2]");
  EXPECT_EQ(format(parse_tensor3("L[1] (x) L[2] (x) L[3]")), "L[1] (x) L[2] (x) L[3]");
  EXPECT_THROW(parse_tensor2("L[1]"), ParseError);
}

TEST(Literal, ThirdsAreNotIndices) {
  const auto d = diagnostic_of("L[1/3]");
  EXPECT_EQ(d.column, 3u);
  EXPECT_NE(d.message.find("integers"), std::string::npos);
  const auto y = diagnostic_of("Y[1/3]");
  EXPECT_NE(y.message.find("halves"), std::string::npos);
  EXPECT_NE(diagnostic_of("Y[2/2]").message.find("odd"), std::string::npos);
}

TEST(Literal, DecimalCoefficientsAreRejected) {
  const auto d = diagnostic_of("L[1] + 0.5*M[2]");
  EXPECT_EQ(d.column, 8u);
  EXPECT_NE(d.message.find("decimal"), std::string::npos);
}

TEST(Literal, DiagnosticsCarryOneBasedPositions) {
  EXPECT_EQ(diagnostic_of("Q[1]").column, 1u);
  EXPECT_EQ(diagnostic_of("L[1] M[2]").column, 6u);
  EXPECT_EQ(diagnostic_of("").message, "empty literal");
  EXPECT_EQ(diagnostic_of("L[").token, "<end>");
  EXPECT_EQ(diagnostic_of("3*").column, 3u);
  EXPECT_THROW(parse_element("1/0*L[1]"), ParseError);
  EXPECT_THROW(parse_element("cc"), ParseError);
  EXPECT_THROW(parse_element("L[99999999999]"), ParseError);
}

TEST(RMatrix, CommentsBlankLinesAndSums) {
  const Tensor2 r = parse_rmatrix_text("# Witt r-matrix\n\nL[0] (x) L[1]   # first leg\n - L[1] (x) L[0]\r\n\n");
  EXPECT_EQ(r, parse_tensor2("L[0] (x) L[1] - L[1] (x) L[0]"));
  EXPECT_EQ(parse_rmatrix_text(format_rmatrix(r)), r);
  try {
    parse_rmatrix_text("L[0] (x) L[1]\n\nL[2] (x)\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.diagnostic().line, 3u);
  }
}

TEST(LiteralProperty, RandomCanonicalRoundTrip) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> kind(0, 3), idx(-20, 20), num(-9, 9), den(1, 6), len(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    Element e;
    for (int i = len(rng); i > 0; --i) {
      const int k = kind(rng);
      BasisIndex b = k == 3 ? central() : k == 0 ? L(idx(rng)) : k == 1 ? M(idx(rng)) : Ydd(2 * idx(rng) + (trial % 2));
      e.add(b, ratio(num(rng), den(rng)));
    }
    const std::string text = format(e);
    EXPECT_EQ(parse_element(text), e) << text;
    EXPECT_EQ(format(parse_element(text)), text);
  }
}

// --- derivation tables -------------------------------------------------------------

TEST(TableJson, RoundTripAlgebraAndTensor) {
  const Window w = Window::symmetric(6);
  const auto p = make_params(1, -1);
  CatalogParams c;
  c.alpha = 2;
  c.beta = ratio(1, 3);
  const auto a = catalog<Element>(p, c, w)[0].table;
  EXPECT_EQ(table_from_json<Element>(Json::parse(table_to_json(a).dump())), a);

  const auto t = inner(parse_tensor2("L[1] (x) M[-1] - M[-1] (x) L[1]"), p, w);
  const Json j = table_to_json(t);
  EXPECT_EQ(j["target"], "tensor-square");
  EXPECT_EQ(j["degree"], "0");
  EXPECT_EQ(table_from_json<Tensor2>(j), t);
  EXPECT_EQ(table_target(j), Target::TensorSquare);
}

TEST(TableJson, KeyOrder) {
  AlgebraDerivation d;
  d.window = Window::symmetric(2);
  d.set(L(1), parse_element("M[1]"));
  EXPECT_EQ(table_to_json(d).dump(),
            R"({"target":"algebra","degree":null,"window":{"lo":-2,"hi":2},"values":[{"gen":"L[1]","value":"M[1]"}]})");
}

TEST(TableJson, ValidationErrors) {
  const Json good = Json::parse(R"({"target":"algebra","degree":"0","window":{"lo":-2,"hi":2},
                                     "values":[{"gen":"L[1]","value":"M[1]"}]})");
  EXPECT_NO_THROW(table_from_json<Element>(good));
  EXPECT_THROW(table_from_json<Tensor2>(good), FormatError);

  auto broken = [&](auto edit) {
    Json j = good;
    edit(j);
    return j;
  };
  EXPECT_THROW(table_from_json<Element>(broken([](Json &j) { j.erase("window"); })), FormatError);
  EXPECT_THROW(table_from_json<Element>(broken([](Json &j) { j["window"]["lo"] = 1; })), FormatError);
  EXPECT_THROW(table_from_json<Element>(broken([](Json &j) { j["degree"] = 1; })), FormatError);
  EXPECT_THROW(table_from_json<Element>(broken([](Json &j) { j["degree"] = "1/3"; })), FormatError);
  EXPECT_THROW(table_from_json<Element>(broken([](Json &j) { j["values"][0]["gen"] = "2*L[1]"; })), FormatError);
  EXPECT_THROW(table_from_json<Element>(broken([](Json &j) { j["values"].push_back(j["values"][0]); })), FormatError);
  EXPECT_THROW(table_from_json<Element>(broken([](Json &j) { j["values"][0]["value"] = "0.5*M[1]"; })), ParseError);
  EXPECT_THROW(table_target(broken([](Json &j) { j["target"] = "module"; })), FormatError);
}

// --- reports ----------------------------------------------------------------------------

TEST(ReportJson, SchemaAndStableKeyOrder) {
  const auto rep = solve_h1(make_params(1, 3, true), TargetSpace::TensorSquare, HalfInt{0}, Window::symmetric(8));
  const Json j = report_to_json(rep);
  std::vector<std::string> keys;
  for (const auto &[k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "case", "unknowns", "equations", "rank", "dim_der", "dim_inn",
                                            "dim_h1", "inner_in_kernel", "certificate"}));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["case"]["s"], "1/2");
  EXPECT_EQ(j["case"]["target"], "tensor-square");
  EXPECT_EQ(j["dim_h1"], rep.dim_h1);
  EXPECT_EQ(j.dump(), report_to_json(solve_h1(make_params(1, 3, true), TargetSpace::TensorSquare, HalfInt{0},
                                              Window::symmetric(8)))
                          .dump());
}
