#include <gtest/gtest.h>

#include "common.hpp"
#include "regcert/harness.hpp"

using namespace regcert;
using namespace regcert::testing;

namespace {

TEST(Parser, IdealOverRationals) {
  const IdealFile f = parse_ideal_file("ring x1 x2; char 0; gens: x1^2, x2^2");
  EXPECT_TRUE(f.ring.field().is_rational());
  EXPECT_EQ(f.ring.names(), (std::vector<std::string>{"x1", "x2"}));
  const auto I = to_presentation<Rational>(f);
  ASSERT_EQ(I.generators().size(), 2u);
  EXPECT_EQ(I.generators()[0].leading_monomial(), mono({2, 0}));
  EXPECT_EQ(I.generators()[1].leading_monomial(), mono({0, 2}));
}

TEST(Parser, ConicParametrisationRoundTrips) {
  const std::string text = "param n=3 m=2 d=2; f: y1^2, y1*y2, y2^2";
  const ParamFile p = parse_param_file(text);
  EXPECT_EQ(p.n, 3u);
  EXPECT_EQ(p.m, 2u);
  EXPECT_EQ(p.d, 2u);
  const auto P = to_parametrisation<Zp>(p);
  EXPECT_EQ(P.f[1], poly<Zp>("y1 y2", "y1*y2"));
  const std::string printed = print(p);
  EXPECT_EQ(print(parse_param_file(printed)), printed);
  EXPECT_TRUE(std::holds_alternative<ParamFile>(parse_input(text)));
}

TEST(Parser, DanglingOperatorIsReportedAtTheOperator) {
  try {
    parse_ideal_file("gens: x1 +");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 10u);
  }
}

struct BadInput {
  const char* text;
  std::size_t line;
  std::size_t column;
};

class ParserErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParserErrors, CarryPosition) {
  const BadInput& bad = GetParam();
  try {
    parse_input(bad.text);
    FAIL() << "accepted: " << bad.text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), bad.line) << e.what();
    EXPECT_EQ(e.column(), bad.column) << e.what();
    EXPECT_NE(std::string(e.what()).find("line " + std::to_string(bad.line)), std::string::npos);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, ParserErrors,
    ::testing::Values(BadInput{"ring x1 x2;\ngens: x1 + x3", 2, 12},      // unknown variable
                      BadInput{"ring x1;\nchar 6;\ngens: x1", 2, 6},      // not prime
                      BadInput{"ring x1; char 5; gens: 1/5*x1", 1, 24},     // denominator vanishes mod p
                      BadInput{"ring x1; gens: 1/0*x1", 1, 18},             // zero denominator
                      BadInput{"ring x1; order foo; gens: x1", 1, 16},    // unknown order
                      BadInput{"param n=2 m=1 d=2; f: y1^2", 1, 20},      // too few forms
                      BadInput{"param n=1 m=1 d=2; f: y1^3", 1, 23},      // wrong degree
                      BadInput{"gens: x1 ^", 1, 11}));

TEST(Parser, CommentsAndInferredRing) {
  const IdealFile f = parse_ideal_file("# cubic\ngens: x10*x2 - x1^2, # first\n  x2^3");
  EXPECT_EQ(f.ring.names(), (std::vector<std::string>{"x1", "x2", "x10"}));
  EXPECT_EQ(f.gens.size(), 2u);
}

TEST(Parser, ElimOrderSetsTheSubring) {
  const IdealFile f = parse_ideal_file("ring x1 x2 x3; order elim 1; gens: x1*x3 - x2^2");
  EXPECT_EQ(f.ring.kept(), 2u);
  EXPECT_EQ(f.order.kind(), TermOrder::Kind::block);
  EXPECT_EQ(f.order.eliminated(), 1u);
}

TEST(Printer, RoundTripIsByteIdentical) {
  const std::vector<std::string> inputs = {
      "ring x1 x2 x3; char 0; order degrevlex; gens: 1/2*x1^2 - x3*x2 + 3, x3^2 - 2/3*x1",
      "ring a b; char 7; gens: 9*a*b + 15*b^2 - 1",
      "ring x1 x2 x3; order elim 2; gens: x3 - x1^2, x2 - x1*x2",
      "gens: x2 + x1",
  };
  for (const auto& text : inputs) {
    const std::string once = print(parse_ideal_file(text));
    EXPECT_EQ(print(parse_ideal_file(once)), once) << text;
  }
  // coefficients are reduced into the field and terms sorted by the order
  EXPECT_EQ(print(parse_ideal_file("ring a b; char 7; gens: 9*a*b + 15*b^2 - 1")),
            "ring a b;\nchar 7;\norder lex;\ngens: b^2 + 2*b*a - 1\n");
}

TEST(Printer, PresentationRoundTrip) {
  const auto I = ideal<Rational>("ring x1 x2 x3; gens: 1/2*x1^2 - x3*x2, x3^2 - 2/3*x1", FieldSpec::rationals());
  const IdealFile file = to_ideal_file(I, TermOrder::lex());
  const auto back = to_presentation<Rational>(parse_ideal_file(print(file)));
  EXPECT_EQ(back.generators(), I.generators());
}

// ---------------------------------------------------------------------------

TEST(Report, StatusAggregation) {
  VerificationReport r("demo", FieldSpec(), 5);
  EXPECT_EQ(r.status(), Status::pass);
  InstanceResult a;
  a.digest = "b";
  r.add(a);
  InstanceResult b;
  b.digest = "a";
  b.mark_inconclusive("cutoff");
  r.add(b);
  EXPECT_EQ(r.status(), Status::inconclusive);
  InstanceResult c;
  c.digest = "c";
  EXPECT_FALSE(c.check(false, "2 <= 1"));
  r.add(c);
  EXPECT_EQ(r.status(), Status::fail);
  EXPECT_EQ(exit_code(r.status()), 1);
  EXPECT_EQ(exit_code(Status::inconclusive), 2);
  EXPECT_EQ(exit_code(Status::pass), 0);
  ASSERT_TRUE(r.instances()[2].witness.has_value());
  EXPECT_NE(r.instances()[2].witness->find("2 <= 1"), std::string::npos);
}

TEST(Report, FailureNeverDowngradedByLaterPass) {
  InstanceResult inst;
  inst.check(false, "first");
  inst.check(true, "second");
  inst.mark_inconclusive("third");
  EXPECT_EQ(inst.status, Status::fail);
}

TEST(Report, JsonSchemaAndOrderIndependence) {
  VerificationReport a("demo", FieldSpec(), 9), b("demo", FieldSpec(), 9);
  for (const char* d : {"x", "y", "z"}) {
    InstanceResult inst;
    inst.digest = d;
    inst.values["v"] = d;
    a.add(inst);
  }
  for (const char* d : {"z", "x", "y"}) {
    InstanceResult inst;
    inst.digest = d;
    inst.values["v"] = d;
    b.add(inst);
  }
  a.add_timing("phase", 1.0);
  b.add_timing("phase", 7.0);
  EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump());
  const json j = a.to_json(true);
  for (const char* key : {"check", "status", "field", "seed", "instances", "timings_ms"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["instances"][0]["digest"], "x");
  EXPECT_EQ(j["field"], "GF(32003)");
}

TEST(Report, VerifyRunsSerializeIdentically) {
  const auto run = [] {
    VerificationReport r("main", FieldSpec(), 7);
    for (std::uint64_t t = 0; t < 3; ++t) verify_main_into(r, random_parametrisation<Zp>(3, 2, 2, trial_seed(7, t), FieldSpec()));
    return r.to_json(false).dump();
  };
  EXPECT_EQ(run(), run());
  EXPECT_EQ(gtable({1, 2}, {2, 3}, {1, 2}, 3, FieldSpec()).to_json(false).dump(),
            gtable({1, 2}, {2, 3}, {1, 2}, 3, FieldSpec()).to_json(false).dump());
}

TEST(Report, DigestIsStable) {
  EXPECT_EQ(digest_of(""), "cbf29ce484222325");
  EXPECT_EQ(digest_of("a"), "af63dc4c8601ec8c");
}

}  // namespace
