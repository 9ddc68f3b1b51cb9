// Worked examples with hand-checkable answers, one test per operation.

#include <gtest/gtest.h>

#include <algorithm>

#include "common.hpp"
#include "regcert/betti.hpp"
#include "regcert/graded.hpp"
#include "regcert/harness.hpp"
#include "regcert/lex.hpp"

using namespace regcert;
using namespace regcert::testing;

namespace {

const FieldSpec QQ = FieldSpec::rationals();

const char* kEliminationIdeal = "ring x1 x2 x3; gens: x1*x2 + x2*x3, x1*x3, x3^2";
const char* kStrictIdeal = "ring x1 x2 x3 x4 x5; gens: x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x2^2, x3^2";

TEST(Compare, Examples) {
  EXPECT_EQ(compare(TermOrder::lex(), mono({0, 1}), mono({5, 0})), std::strong_ordering::greater);
  EXPECT_EQ(compare(TermOrder::degrevlex(), mono({1, 2}), mono({1, 2})), std::strong_ordering::equal);
  EXPECT_EQ(compare(TermOrder::degrevlex(), mono({1, 0, 1}), mono({0, 2, 0})), std::strong_ordering::less);
}

TEST(PolyNormalize, Examples) {
  const FieldSpec F;
  using T = Term<Zp>;
  EXPECT_TRUE(Polynomial<Zp>::normalize({T{Zp(1, F), mono({1, 0})}, T{Zp(-1, F), mono({1, 0})}}, 2, TermOrder::lex(), F)
                  .is_zero());
  const auto p = Polynomial<Zp>::normalize({T{Zp(1, F), mono({1, 0})}, T{Zp(2, F), mono({0, 1})}}, 2, TermOrder::lex(), F);
  EXPECT_EQ(p, poly<Zp>("x1 x2", "2*x2 + x1"));
  EXPECT_EQ(p.leading_monomial(), mono({0, 1}));
  const auto q = Polynomial<Zp>::normalize({T{Zp(1, F), mono({1, 1})}, T{Zp(1, F), mono({1, 1})}}, 2, TermOrder::lex(), F);
  EXPECT_EQ(q, poly<Zp>("x1 x2", "2*x1*x2"));
  // over GF(2) the same merge cancels
  const FieldSpec F2(2);
  EXPECT_TRUE(Polynomial<Zp>::normalize({T{Zp(1, F2), mono({1, 1})}, T{Zp(1, F2), mono({1, 1})}}, 2, TermOrder::lex(), F2)
                  .is_zero());
}

TEST(ApplyPowerMap, Examples) {
  for (unsigned d = 1; d <= 4; ++d) {
    const auto image = apply_power_map(PowerMap({d, d}), poly<Rational>("x1 x2", "x1 + x2", QQ));
    EXPECT_EQ(image, poly<Rational>("x1 x2", "x1^" + std::to_string(d) + " + x2^" + std::to_string(d), QQ));
  }
  const auto f = poly<Rational>("x1 x2 x3", "x1*x3 - x2^2", QQ);
  EXPECT_EQ(apply_power_map(PowerMap({1, 1, 1}), f), f);
  const auto g = apply_power_map(PowerMap({2, 1, 3}), f);
  EXPECT_EQ(g, poly<Rational>("x1 x2 x3", "x1^2*x3^3 - x2^2", QQ));
  EXPECT_EQ(g.leading_monomial(), mono({2, 0, 3}));
  EXPECT_EQ(g.leading_monomial(), PowerMap({2, 1, 3}).apply(f.leading_monomial()));
}

TEST(IsHomogeneous, Examples) {
  const auto h = poly<Zp>("x1 x2", "x1^2 + x2^2").homogeneity();
  EXPECT_TRUE(h.first);
  EXPECT_EQ(h.second, std::optional<std::uint32_t>(2));
  const auto g = poly<Zp>("x1 y1 y2", "x1 - y1^2 - 3*y1*y2").homogeneity();
  EXPECT_FALSE(g.first);
  EXPECT_FALSE(g.second.has_value());
  const auto k = poly<Zp>("x1 y1 y2", "x1^2 - y1^2 - 3*y1*y2").homogeneity();
  EXPECT_TRUE(k.first);
  EXPECT_EQ(k.second, std::optional<std::uint32_t>(2));
}

TEST(SPolynomial, Examples) {
  const auto a = poly<Zp>("x1 x2 x3", "x1*x3");
  const auto b = poly<Zp>("x1 x2 x3", "x3^2");
  EXPECT_TRUE(s_polynomial(a, b).is_zero());
  const auto f = poly<Zp>("x1 x2 x3", "x1*x3 - x2^2 + x1");
  EXPECT_TRUE(s_polynomial(f, f).is_zero());
  EXPECT_TRUE(s_polynomial(poly<Zp>("x1 x2", "x1^2"), poly<Zp>("x1 x2", "x2^2")).is_zero());
}

TEST(NormalForm, Examples) {
  const std::vector<Polynomial<Zp>> x1 = {poly<Zp>("x1 x2", "x1")};
  const auto d1 = normal_form<Zp>(poly<Zp>("x1 x2", "x1^2"), x1);
  EXPECT_TRUE(d1.remainder.is_zero());
  EXPECT_EQ(d1.quotients[0], poly<Zp>("x1 x2", "x1"));

  const std::vector<Polynomial<Zp>> conic = {poly<Zp>("x1 x2 x3", "x1*x3 - x2^2")};
  const auto d2 = normal_form<Zp>(poly<Zp>("x1 x2 x3", "x2^2"), conic);
  EXPECT_EQ(d2.remainder, poly<Zp>("x1 x2 x3", "x2^2"));
  EXPECT_TRUE(d2.quotients[0].is_zero());

  const auto G = groebner_basis(ideal<Zp>(kEliminationIdeal), TermOrder::lex());
  EXPECT_TRUE(reduce<Zp>(poly<Zp>("x1 x2 x3", "x1*x2*x3"), G.elements).is_zero());
}

TEST(Buchberger, Examples) {
  const auto ci = ideal<Zp>("ring x1 x2; gens: x1^2, x2^2");
  const auto G = groebner_basis(ci, TermOrder::lex());
  // same set of elements; the basis is stored in its own canonical order
  EXPECT_TRUE(std::is_permutation(G.elements.begin(), G.elements.end(), ci.generators_under(TermOrder::lex()).begin()));
  EXPECT_EQ(G.elements.size(), 2u);

  const auto I = eliminate(groebner_basis(ideal<Zp>(kEliminationIdeal), TermOrder::lex()), 2);
  ASSERT_EQ(I.elements.size(), 1u);
  EXPECT_EQ(I.elements[0], poly<Zp>("x1 x2", "x1^2*x2"));

  const std::vector<Polynomial<Zp>> f = {poly<Zp>("y1 y2", "y1^2"), poly<Zp>("y1 y2", "y1*y2"),
                                         poly<Zp>("y1 y2", "y2^2")};
  const auto graph = graph_ideal<Zp>(f);
  const auto GG = groebner_basis(graph, TermOrder::lex());
  const auto target = poly<Zp>("x1 x2 x3 y1 y2", "x1*x3 - x2^2").with_order(TermOrder::lex());
  bool found = false;
  for (const auto& g : GG.elements) found = found || g == target;
  EXPECT_TRUE(found);
}

TEST(ReduceBasis, Examples) {
  const PolyRing R = PolyRing::standard(2, FieldSpec());
  GroebnerBasis<Zp> G{R, TermOrder::lex(), {poly<Zp>("x1 x2", "x1"), poly<Zp>("x1 x2", "x1^2 + x2")}, false, {}};
  const auto reduced = reduce_basis(G);
  EXPECT_EQ(reduced.elements, (std::vector<Polynomial<Zp>>{poly<Zp>("x1 x2", "x2"), poly<Zp>("x1 x2", "x1")}));
  EXPECT_EQ(reduce_basis(reduced).elements, reduced.elements);
}

TEST(ReduceBasis, TenShufflesAgree) {
  const auto J = ideal<Rational>("ring x1 x2 x3; gens: x1^2 + x2*x3 - 2, x2^2 - x1*x3 + x1, x3^3 - x1*x2, x1*x2*x3 - 1", QQ);
  const auto reference = groebner_basis(J, TermOrder::degrevlex()).elements;
  Rng rng(3);
  for (int s = 0; s < 10; ++s) {
    auto gens = J.generators();
    for (std::size_t i = gens.size(); i > 1; --i) std::swap(gens[i - 1], gens[rng.below(i)]);
    EXPECT_EQ(groebner_basis(IdealPresentation<Rational>(J.ring(), gens), TermOrder::degrevlex()).elements, reference);
  }
}

TEST(InitialIdeal, Examples) {
  const auto G = groebner_basis(ideal<Zp>("ring x1 x2 x3; gens: x1*x3 - x2^2"), TermOrder::lex());
  EXPECT_EQ(initial_ideal(G), monomial_ideal(3, {{1, 0, 1}}));
  EXPECT_EQ(initial_ideal(groebner_basis(ideal<Zp>("ring x1 x2; gens: x1^2, x2^2"), TermOrder::lex())),
            monomial_ideal(2, {{2, 0}, {0, 2}}));
  const auto GJ = groebner_basis(ideal<Zp>(kEliminationIdeal), TermOrder::lex());
  const MonomialIdeal via_initial = initial_ideal(GJ).intersect_subring(2);
  const MonomialIdeal via_elimination = initial_ideal(eliminate(GJ, 2));
  EXPECT_EQ(via_initial, via_elimination);
  EXPECT_EQ(via_initial, monomial_ideal(2, {{2, 1}}));
}

TEST(Eliminate, Examples) {
  const auto G = groebner_basis(ideal<Zp>("ring x1 x2; gens: x1^2, x2^2"), TermOrder::lex());
  const auto I = eliminate(G, 1);
  ASSERT_EQ(I.elements.size(), 1u);
  EXPECT_EQ(I.elements[0], poly<Zp>("x1", "x1^2"));
  const auto all = eliminate(G, 2);
  EXPECT_EQ(all.elements, G.elements);
}

TEST(KernelOfMap, Examples) {
  const std::vector<Polynomial<Zp>> single = {poly<Zp>("y1 y2", "y1^3")};
  EXPECT_TRUE(kernel_of_map<Zp>(single).elements.empty());
  const std::vector<Polynomial<Zp>> cubic = {poly<Zp>("y1 y2", "y1^3"), poly<Zp>("y1 y2", "y1^2*y2"),
                                             poly<Zp>("y1 y2", "y1*y2^2"), poly<Zp>("y1 y2", "y2^3")};
  const auto P = kernel_of_map<Zp>(cubic);
  for (const auto& minor : {"x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"}) {
    const auto g = poly<Zp>("x1 x2 x3 x4", minor);
    EXPECT_TRUE(compose<Zp>(g, cubic).is_zero());
    EXPECT_TRUE(reduce<Zp>(g.with_order(TermOrder::lex()), P.elements).is_zero());
  }
  EXPECT_EQ(regularity(P.presentation()), 2);
}

TEST(ImageIdeal, Examples) {
  const std::vector<Polynomial<Zp>> f = {poly<Zp>("y1 y2", "y1^2 + y1*y2"), poly<Zp>("y1 y2", "y2^2 - 3*y1^2")};
  const auto J = graph_ideal<Zp>(f);
  const auto Jp = image_ideal(PowerMap::uniform(4, 2, 2), J);
  const auto expected = ideal<Zp>("ring x1 x2 y1 y2; gens: x1^2 - y1^2 - y1*y2, x2^2 - y2^2 + 3*y1^2");
  EXPECT_TRUE(ideal_equal(Jp, expected, TermOrder::lex()));
  EXPECT_TRUE(Jp.is_homogeneous());

  const auto I = ideal<Zp>("ring x1 x2; gens: x1^2, x2^2");
  EXPECT_EQ(image_ideal(PowerMap({1, 1}), I).generators(), I.generators());
  EXPECT_TRUE(ideal_equal(image_ideal(PowerMap::uniform(2, 3), I), ideal<Zp>("ring x1 x2; gens: x1^6, x2^6"),
                          TermOrder::lex()));
}

TEST(IdealEqual, Examples) {
  EXPECT_TRUE(ideal_equal(ideal<Zp>("ring x1; gens: x1"), ideal<Zp>("ring x1; gens: 2*x1"), TermOrder::lex()));
  EXPECT_FALSE(ideal_equal(ideal<Zp>("ring x1; gens: x1^2"), ideal<Zp>("ring x1; gens: x1"), TermOrder::lex()));
}

TEST(VerifyPoweli, Examples) {
  const auto J = ideal<Zp>(kEliminationIdeal);
  EXPECT_TRUE(verify_poweli(J, PowerMap({1, 1, 1}), 2).passed());
  EXPECT_TRUE(verify_poweli(J, PowerMap({2, 2, 2}), 2).passed());
  RandomIdealShape shape;
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(trial_seed(123, s));
    const auto R = random_ideal<Zp>(shape, rng, FieldSpec());
    const auto report = verify_poweli(R, random_power_map(3, 3, rng), 1 + s % 2);
    EXPECT_TRUE(report.passed()) << report.to_text();
  }
}

TEST(HilbertFunction, Examples) {
  EXPECT_EQ(hilbert_function(monomial_ideal(2, {{2, 0}, {0, 2}}), 5).dims,
            (std::vector<std::int64_t>{1, 2, 1, 0, 0, 0}));
  EXPECT_EQ(hilbert_function(MonomialIdeal(3), 5).dims, (std::vector<std::int64_t>{1, 3, 6, 10, 15, 21}));
  const std::vector<Polynomial<Zp>> cubic = {poly<Zp>("y1 y2", "y1^3"), poly<Zp>("y1 y2", "y1^2*y2"),
                                             poly<Zp>("y1 y2", "y1*y2^2"), poly<Zp>("y1 y2", "y2^3")};
  const MonomialIdeal in_P = initial_ideal(kernel_of_map<Zp>(cubic));
  const HilbertData h = hilbert_function(in_P, 10);
  for (std::uint32_t t = 0; t <= 10; ++t) {
    EXPECT_EQ(h.dims[t], 3 * std::int64_t(t) + 1);
    EXPECT_EQ(static_cast<std::int64_t>(standard_monomial_basis(in_P, t).size()), h.dims[t]);
  }
}

TEST(HfOfHomogeneous, Examples) {
  const auto h = hf_of_homogeneous(ideal<Zp>("ring x1 x2; gens: x1^2 + x2^2"), TermOrder::degrevlex(), 6);
  EXPECT_EQ(h.dims, (std::vector<std::int64_t>{1, 2, 2, 2, 2, 2, 2}));
  const auto J = ideal<Zp>(kEliminationIdeal);
  const MonomialIdeal in_J = initial_ideal(groebner_basis(J, TermOrder::degrevlex()));
  EXPECT_EQ(hf_of_homogeneous(J, TermOrder::degrevlex(), 6), hilbert_function(in_J, 6));
  EXPECT_EQ(raw_hilbert_function(J, 6), hilbert_function(in_J, 6));
  for (std::uint64_t s = 0; s < 3; ++s) {
    const auto p = random_parametrisation<Zp>(2, 2, 2, s, FieldSpec());
    const auto Jp = image_ideal(PowerMap::uniform(4, 2, 2), graph_ideal<Zp>(p.f));
    EXPECT_EQ(hf_of_homogeneous(Jp, TermOrder::degrevlex(), 8), ci_hilbert_function(2, 2, 2, 8));
  }
}

TEST(CiHilbertFunction, Examples) {
  EXPECT_EQ(ci_hilbert_function(1, 2, 1, 5).dims, (std::vector<std::int64_t>{1, 2, 2, 2, 2, 2}));
  EXPECT_EQ(ci_hilbert_function(1, 2, 2, 5).dims, (std::vector<std::int64_t>{1, 3, 5, 7, 9, 11}));
  EXPECT_EQ(ci_hilbert_function(2, 2, 0, 5).dims, (std::vector<std::int64_t>{1, 2, 1, 0, 0, 0}));
  EXPECT_EQ(ci_hilbert_function(2, 2, 0, 5), hilbert_function(monomial_ideal(2, {{2, 0}, {0, 2}}), 5));
}

TEST(LexSegmentIdeal, Examples) {
  const auto ci = hilbert_function(monomial_ideal(2, {{2, 0}, {0, 2}}), 6);
  const LexResult lex = lex_segment_ideal(ci.to_ideal_side(), 2);
  EXPECT_TRUE(lex.complete);
  EXPECT_EQ(lex.ideal, monomial_ideal(2, {{0, 2}, {1, 1}, {3, 0}}));

  for (unsigned d = 1; d <= 4; ++d) {
    const auto hyper = hf_of_homogeneous(ideal<Zp>("ring x1 x2 x3; gens: x1^" + std::to_string(d) + " + x2^" +
                                                   std::to_string(d) + " - 4*x3^" + std::to_string(d)),
                                         TermOrder::degrevlex(), d + 3);
    const LexResult L = lex_segment_ideal(hyper, d);
    EXPECT_TRUE(L.complete);
    EXPECT_EQ(L.ideal, MonomialIdeal(3, {Monomial::variable(3, 2, d)}));
  }
  const LexResult zero = lex_segment_ideal(hilbert_function(MonomialIdeal(3), 4), 0);
  EXPECT_TRUE(zero.complete);
  EXPECT_TRUE(zero.ideal.is_zero());
}

TEST(SegmentClosureCheck, Examples) {
  const auto J = ideal<Zp>(kEliminationIdeal);
  EXPECT_TRUE(segment_closure_check(hf_of_homogeneous(J, TermOrder::degrevlex(), 8)).passed());
  HilbertData fabricated{{0, 0, 1, 0, 0}, HilbertData::Side::ideal, 2};
  const auto bad = segment_closure_check(fabricated);
  EXPECT_FALSE(bad.passed());
  EXPECT_EQ(bad.instances().front().values["failed_degree"], 3);
  const auto p = random_parametrisation<Zp>(2, 2, 2, 1, FieldSpec());
  const auto Jp = image_ideal(PowerMap::uniform(4, 2, 2), graph_ideal<Zp>(p.f));
  EXPECT_TRUE(segment_closure_check(hf_of_homogeneous(Jp, TermOrder::degrevlex(), 10)).passed());
}

TEST(IsStronglyStable, Examples) {
  EXPECT_TRUE(is_strongly_stable(monomial_ideal(2, {{0, 2}, {1, 1}, {3, 0}})));
  EXPECT_FALSE(is_strongly_stable(monomial_ideal(3, {{1, 0, 1}})));
}

TEST(StableRegularity, Examples) {
  const auto L = monomial_ideal(2, {{0, 2}, {1, 1}, {3, 0}});
  EXPECT_EQ(stable_regularity(L), 3u);
  EXPECT_EQ(regularity(L), 3);
  for (unsigned d = 1; d <= 5; ++d) EXPECT_EQ(stable_regularity(MonomialIdeal(3, {Monomial::variable(3, 2, d)})), d);
  const LexResult lj = lex_of_complete_intersection(1, 2, 2);
  EXPECT_EQ(lj.ideal, MonomialIdeal(3, {Monomial::variable(3, 2, 2)}));
  EXPECT_EQ(stable_regularity(lj.ideal), 2u);
}

TEST(ComputeG, Examples) {
  for (unsigned d = 1; d <= 5; ++d) EXPECT_EQ(compute_G(1, d, 1), d);
  EXPECT_EQ(compute_G(2, 2, 0), 3u);
  EXPECT_EQ(compute_G(1, 2, 2), 2u);
  EXPECT_EQ(g_bound(1, 2, 2), std::optional<std::uint64_t>(4));
  EXPECT_EQ(g_bound(3, 2, 2), std::optional<std::uint64_t>(64));
  EXPECT_FALSE(g_bound(2, 2, 0).has_value());
  EXPECT_THROW(g_bound(9, 3, 4), std::overflow_error);
}

TEST(StandardMonomialBasis, Examples) {
  EXPECT_EQ(standard_monomial_basis(monomial_ideal(2, {{2, 0}, {0, 2}}), 2), (std::vector<Monomial>{mono({1, 1})}));
  EXPECT_EQ(standard_monomial_basis(MonomialIdeal(3), 1).size(), 3u);
}

TEST(KoszulHomologyRank, Examples) {
  const auto M = monomial_ideal(2, {{2, 0}, {0, 2}});
  EXPECT_EQ(koszul_homology_rank(M, 1, 2), 2u);
  EXPECT_EQ(koszul_homology_rank(M, 2, 4), 1u);
  EXPECT_EQ(koszul_homology_rank(M, 0, 0), 1u);
  const auto J = ideal<Zp>(kEliminationIdeal);
  EXPECT_EQ(koszul_homology_rank(J, 0, 0), 1u);
  EXPECT_EQ(regularity(J), 2);
}

TEST(BettiTable, Examples) {
  const BettiTable ci = betti_table(monomial_ideal(2, {{2, 0}, {0, 2}}));
  EXPECT_EQ(ci.entries, (decltype(ci.entries){{{0, 2}, 2}, {{1, 4}, 1}}));
  EXPECT_EQ(regularity(ci), 3);

  const auto strict_case = ideal<Zp>(kStrictIdeal);
  const BettiTable rt = betti_table(strict_case);
  EXPECT_EQ(t_invariants(rt).t, (std::vector<std::uint32_t>{2, 4, 5, 5, 6}));
  EXPECT_EQ(regularity(rt), 3);

  for (unsigned s = 1; s <= 4; ++s) {
    const BettiTable pt = betti_table(ideal<Zp>("ring x1 x2 x3; gens: x1^" + std::to_string(s) + " - x2*x3^" +
                                                std::to_string(s - 1)));
    EXPECT_EQ(pt.entries, (decltype(pt.entries){{{0, s}, 1}}));
    EXPECT_EQ(regularity(pt), static_cast<std::int64_t>(s));
  }
}

TEST(Regularity, Examples) {
  EXPECT_EQ(regularity(ideal<Zp>("ring x1 x2 x3; gens: x1*x3 - x2^2")), 2);
  EXPECT_EQ(regularity(ideal<Zp>("ring x1 x2; gens: x1^2*x2")), 3);
  EXPECT_THROW(regularity(IdealPresentation<Zp>(PolyRing::standard(2, FieldSpec()), {})), std::invalid_argument);
  EXPECT_THROW(regularity(ideal<Zp>("ring x1 x2; gens: x1, 1")), std::invalid_argument);
}

TEST(TInvariants, Examples) {
  const TInvariants ci = t_invariants(betti_table(monomial_ideal(2, {{2, 0}, {0, 2}})));
  EXPECT_EQ(ci.t, (std::vector<std::uint32_t>{2, 4}));
  EXPECT_EQ(ci.p, 1u);
  for (unsigned s = 1; s <= 4; ++s) {
    const TInvariants pr = t_invariants(betti_table(MonomialIdeal(2, {Monomial::variable(2, 0, s)})));
    EXPECT_EQ(pr.t, (std::vector<std::uint32_t>{s}));
    EXPECT_EQ(pr.p, 0u);
  }
  EXPECT_EQ(t_invariants(betti_table(ideal<Zp>(kStrictIdeal))).p, 2u);
}

TEST(CheckFlatBetti, Examples) {
  const auto J = ideal<Zp>(kEliminationIdeal);
  const auto same = check_flat_betti(J, 1);
  EXPECT_TRUE(same.passed());
  EXPECT_EQ(same.instances()[0].values["betti_I"], same.instances()[0].values["betti_I_prime"]);

  const auto ci = check_flat_betti(ideal<Zp>("ring x1 x2; gens: x1^2, x2^2"), 2);
  ASSERT_TRUE(ci.passed());
  const auto& v = ci.instances()[0].values;
  EXPECT_EQ(v["reg_I"], 3);
  EXPECT_EQ(v["reg_I_prime"], 7);
  EXPECT_EQ(v["gap"], "1/2");
  EXPECT_EQ(v["flat_bound"], "equality");

  const auto strict_case = check_flat_betti(ideal<Zp>(kStrictIdeal), 3);
  ASSERT_TRUE(strict_case.passed());
  EXPECT_EQ(strict_case.instances()[0].values["reg_I_prime"], 14);
  EXPECT_EQ(strict_case.instances()[0].values["flat_bound"], "strict");
}

TEST(VerifyRegflat, Examples) {
  EXPECT_EQ(verify_regflat(ideal<Zp>("ring x1 x2; gens: x1^2, x2^2"), 2).instances()[0].values["flat_bound"], "equality");
  const auto strict = verify_regflat(ideal<Zp>(kStrictIdeal), 3);
  EXPECT_TRUE(strict.passed());
  EXPECT_EQ(strict.instances()[0].values["flat_bound"], "strict");
  EXPECT_TRUE(verify_regflat(ideal<Zp>(kStrictIdeal), 1).passed());
  EXPECT_EQ(verify_regflat(ideal<Zp>(kStrictIdeal), 1).check_name(), "regflat");
}

TEST(VerifyRegbound, Examples) {
  const auto first = verify_regbound(ideal<Zp>("ring x1 x2; gens: x1^2, x2^2"), 1);
  ASSERT_TRUE(first.passed()) << first.to_text();
  EXPECT_EQ(first.instances()[0].values["reg_I"], 2);
  EXPECT_EQ(first.instances()[0].values["reg_lex_J"], 3);

  const auto J = ideal<Zp>(kEliminationIdeal);
  const auto second = verify_regbound(J, 2);
  ASSERT_TRUE(second.passed()) << second.to_text();
  EXPECT_EQ(second.instances()[0].values["reg_I"], 3);
  EXPECT_GE(second.instances()[0].values["reg_lex_J"].get<int>(), 3);
  EXPECT_EQ(regularity(J), 2);
}

TEST(VerifyMain, Examples) {
  Parametrisation<Zp> conic{3, 2, 2, FieldSpec(), {poly<Zp>("y1 y2", "y1^2"), poly<Zp>("y1 y2", "y1*y2"), poly<Zp>("y1 y2", "y2^2")}};
  const auto report = verify_main(conic);
  ASSERT_TRUE(report.passed()) << report.to_text();
  const auto& v = report.instances()[0].values;
  EXPECT_EQ(v["reg_P"], 2);
  EXPECT_EQ(v["P"], "x3*x1 - x2^2");
  EXPECT_EQ(report.instances()[0].bound["d^(n2^(m-1)-1)"], 32);
  EXPECT_LE(2 * v["reg_P"].get<int>(), v["G"].get<int>());

  for (unsigned d = 1; d <= 3; ++d) {
    for (unsigned m = 1; m <= 2; ++m) {
      const auto single = verify_main(random_parametrisation<Zp>(1, m, d, d * 10 + m, FieldSpec()));
      EXPECT_TRUE(single.passed()) << single.to_text();
      EXPECT_EQ(single.instances()[0].values["P"], "0");
    }
  }
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto r = verify_main(random_parametrisation<Rational>(2, 2, 2, s, QQ));
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

TEST(RandomParametrisation, Examples) {
  const auto a = random_parametrisation<Zp>(2, 2, 2, 0, FieldSpec());
  const auto b = random_parametrisation<Zp>(2, 2, 2, 0, FieldSpec());
  EXPECT_EQ(a.f, b.f);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto p = random_parametrisation<Zp>(3, 2, 2, s, FieldSpec());
    for (const auto& f : p.f) {
      EXPECT_FALSE(f.is_zero());
      EXPECT_EQ(f.homogeneity().second, std::optional<std::uint32_t>(2));
    }
    EXPECT_NO_THROW(kernel_of_map<Zp>(p.f));
  }
}

}  // namespace
