#include <gtest/gtest.h>

#include <algorithm>
#include <unordered_map>

#include "common.hpp"
#include "regcert/graded.hpp"
#include "regcert/harness.hpp"
#include "regcert/linalg.hpp"

using namespace regcert;
using namespace regcert::testing;

namespace {

template <class K>
class GroebnerTest : public ::testing::Test {};
using Fields = ::testing::Types<Zp, Rational>;
TYPED_TEST_SUITE(GroebnerTest, Fields);

template <class K>
FieldSpec spec() {
  return field_for(std::is_same_v<K, Rational>);
}

template <class K>
std::vector<IdealPresentation<K>> sample_ideals() {
  const FieldSpec F = spec<K>();
  std::vector<IdealPresentation<K>> out = {
      ideal<K>("ring x1 x2 x3; gens: x1*x2 + x2*x3, x1*x3, x3^2", F),
      ideal<K>("ring x1 x2 x3; gens: x3*x1 - x2^2, x3*x2 - x1^2, x2*x1 - x3", F),
      ideal<K>("ring x1 x2 x3; gens: x1^2 + x2*x3 - 2, x2^2 - x1*x3 + x1, x3^3 - x1*x2", F),
  };
  RandomIdealShape shape;
  for (std::uint64_t s = 0; s < 6; ++s) {
    Rng rng(trial_seed(77, s));
    out.push_back(random_ideal<K>(shape, rng, F));
  }
  return out;
}

std::vector<TermOrder> orders() { return {TermOrder::lex(), TermOrder::degrevlex(), TermOrder::block(1)}; }

TYPED_TEST(GroebnerTest, CofactorsExpressBasisInInputs) {
  using K = TypeParam;
  for (const auto& I : sample_ideals<K>()) {
    for (const auto& order : orders()) {
      BuchbergerOptions opts;
      opts.track_cofactors = true;
      const auto G = buchberger(I, order, opts);
      const auto inputs = I.generators_under(order);
      ASSERT_EQ(G.cofactors.size(), G.elements.size());
      for (std::size_t i = 0; i < G.elements.size(); ++i) {
        Polynomial<K> sum(I.ring().nvars(), order, I.ring().field());
        for (std::size_t k = 0; k < inputs.size(); ++k) sum += G.cofactors[i][k] * inputs[k];
        EXPECT_EQ(sum, G.elements[i]);
      }
    }
  }
}

TYPED_TEST(GroebnerTest, BasisSatisfiesCriterionAndContainsInputs) {
  using K = TypeParam;
  for (const auto& I : sample_ideals<K>()) {
    for (const auto& order : orders()) {
      const auto G = groebner_basis(I, order);
      EXPECT_FALSE(buchberger_criterion_witness<K>(G.elements).has_value());
      for (const auto& g : I.generators_under(order)) EXPECT_TRUE(reduce<K>(g, G.elements).is_zero());
    }
  }
}

TYPED_TEST(GroebnerTest, ReducedBasisIgnoresGeneratorOrderScalingAndStrategy) {
  using K = TypeParam;
  const FieldSpec F = spec<K>();
  for (const auto& I : sample_ideals<K>()) {
    for (const auto& order : orders()) {
      const auto reference = groebner_basis(I, order);
      auto gens = I.generators();
      std::reverse(gens.begin(), gens.end());
      for (std::size_t k = 0; k < gens.size(); ++k) gens[k] = gens[k].scaled(K(static_cast<std::int64_t>(k + 2), F), Monomial(gens[k].nvars()));
      gens.push_back(gens.front() + gens.back());
      EXPECT_EQ(groebner_basis(IdealPresentation<K>(I.ring(), gens), order).elements, reference.elements);

      for (bool criteria : {false, true}) {
        for (auto sel : {BuchbergerOptions::Selection::normal, BuchbergerOptions::Selection::fifo}) {
          BuchbergerOptions opts;
          opts.use_criteria = criteria;
          opts.selection = sel;
          EXPECT_EQ(reduce_basis(buchberger(I, order, opts)).elements, reference.elements);
        }
      }
    }
  }
}

TYPED_TEST(GroebnerTest, ReducedBasisShape) {
  using K = TypeParam;
  for (const auto& I : sample_ideals<K>()) {
    const auto G = groebner_basis(I, TermOrder::degrevlex());
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
      EXPECT_TRUE(G.elements[i].leading_coefficient().is_one());
      for (std::size_t j = 0; j < G.elements.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : G.elements[i].terms()) {
          EXPECT_FALSE(G.elements[j].leading_monomial().divides(t.mono));
        }
      }
    }
  }
}

TEST(Groebner, UnitIdealCollapsesToOne) {
  const auto I = ideal<Zp>("ring x1 x2; gens: x1*x2 - 1, x1");
  const auto G = groebner_basis(I, TermOrder::lex());
  EXPECT_TRUE(G.is_unit());
}

TEST(Groebner, DivisionIdentity) {
  const auto f = poly<Rational>("x1 x2 x3", "x3^3*x2 + 4*x1^2*x3 - x2", FieldSpec::rationals());
  const std::vector<Polynomial<Rational>> divisors = {
      poly<Rational>("x1 x2 x3", "x3*x2 - x1", FieldSpec::rationals()),
      poly<Rational>("x1 x2 x3", "x3^2 + 2*x1", FieldSpec::rationals())};
  const auto div = normal_form<Rational>(f, divisors);
  auto sum = div.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) sum += div.quotients[i] * divisors[i];
  EXPECT_EQ(sum, f);
  for (const auto& t : div.remainder.terms()) {
    for (const auto& g : divisors) EXPECT_FALSE(g.leading_monomial().divides(t.mono));
  }
}

TYPED_TEST(GroebnerTest, EliminationExampleYieldsOneMonomial) {
  using K = TypeParam;
  const FieldSpec F = spec<K>();
  const auto J = ideal<K>("ring x1 x2 x3; gens: x1*x2 + x2*x3, x1*x3, x3^2", F);
  const auto I = eliminate(groebner_basis(J, TermOrder::lex()), 2);
  ASSERT_EQ(I.elements.size(), 1u);
  EXPECT_EQ(I.elements[0], poly<K>("x1 x2", "x1^2*x2", F));
  // the same intersection through the block order
  const auto Ib = eliminate(groebner_basis(J, TermOrder::block(1)), 2);
  EXPECT_TRUE(ideal_equal(I.presentation(), Ib.presentation(), TermOrder::lex()));
}

TEST(Groebner, EliminateRejectsNonEliminatingOrder) {
  const auto J = ideal<Zp>("ring x1 x2 x3; gens: x1*x2 + x2*x3, x1*x3");
  EXPECT_THROW(eliminate(groebner_basis(J, TermOrder::degrevlex()), 2), std::invalid_argument);
}

// dim K[f_1..f_n]_t = rank of {f^a : |a| = t}, computed without any Groebner
// basis; it equals HF(R/P)_t for the kernel P.
template <class K>
std::int64_t image_dimension(const std::vector<Polynomial<K>>& f, std::uint32_t t) {
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> column;
  std::vector<SparseRow<K>> rows;
  for (const auto& a : monomials_of_degree(f.size(), t)) {
    Polynomial<K> prod = Polynomial<K>::constant(K::one(f[0].field()), f[0].nvars(), f[0].order(), f[0].field());
    for (std::size_t i = 0; i < f.size(); ++i) prod = prod * f[i].pow(a[i]);
    std::vector<std::pair<std::uint32_t, K>> entries;
    for (const auto& term : prod.terms()) {
      const auto [it, fresh] = column.try_emplace(term.mono, static_cast<std::uint32_t>(column.size()));
      entries.emplace_back(it->second, term.coeff);
    }
    rows.push_back(make_row<K>(std::move(entries)));
  }
  return static_cast<std::int64_t>(sparse_rank<K>(std::move(rows)));
}

TYPED_TEST(GroebnerTest, KernelMatchesRawLinearAlgebra) {
  using K = TypeParam;
  const FieldSpec F = spec<K>();
  std::vector<Parametrisation<K>> cases;
  for (std::uint64_t s = 0; s < 3; ++s) cases.push_back(random_parametrisation<K>(3, 2, 2, s, F));
  cases.push_back(random_parametrisation<K>(3, 2, 3, 9, F));
  cases.push_back(random_parametrisation<K>(4, 2, 2, 4, F));
  for (const auto& p : cases) {
    KernelOptions ko;
    ko.cross_check = true;
    const auto P = kernel_of_map<K>(p.f, ko);
    for (const auto& g : P.elements) EXPECT_TRUE(compose<K>(g, p.f).is_zero());
    const HilbertData hf = hf_of_homogeneous(P.presentation(), TermOrder::degrevlex(), 6);
    for (std::uint32_t t = 0; t <= 6; ++t) {
      EXPECT_EQ(hf.dims[t], image_dimension(p.f, t)) << "degree " << t;
    }
  }
}

TYPED_TEST(GroebnerTest, TwistedCubicAndConic) {
  using K = TypeParam;
  const FieldSpec F = spec<K>();
  const std::vector<Polynomial<K>> cubic = {poly<K>("y1 y2", "y1^3", F), poly<K>("y1 y2", "y1^2*y2", F),
                                            poly<K>("y1 y2", "y1*y2^2", F), poly<K>("y1 y2", "y2^3", F)};
  const auto P = kernel_of_map<K>(cubic);
  const auto expected = ideal<K>("ring x1 x2 x3 x4; gens: x1*x3 - x2^2, x1*x4 - x2*x3, x2*x4 - x3^2", F);
  EXPECT_TRUE(ideal_equal(P.presentation(), expected, TermOrder::lex()));

  const std::vector<Polynomial<K>> conic = {poly<K>("y1 y2", "y1^2", F), poly<K>("y1 y2", "y1*y2", F),
                                            poly<K>("y1 y2", "y2^2", F)};
  const auto Q = kernel_of_map<K>(conic);
  ASSERT_EQ(Q.elements.size(), 1u);
  EXPECT_EQ(Q.elements[0], poly<K>("x1 x2 x3", "x1*x3 - x2^2", F).with_order(TermOrder::lex()));

  // one form never satisfies a relation
  const std::vector<Polynomial<K>> single = {poly<K>("y1 y2", "y1^2 + 3*y1*y2", F)};
  EXPECT_TRUE(kernel_of_map<K>(single).elements.empty());
}

TEST(Groebner, KernelRejectsMixedDegrees) {
  const std::vector<Polynomial<Zp>> f = {poly<Zp>("y1 y2", "y1^2"), poly<Zp>("y1 y2", "y2")};
  EXPECT_THROW(kernel_of_map<Zp>(f), std::invalid_argument);
}

TYPED_TEST(GroebnerTest, HilbertFunctionViaInitialIdealMatchesRawSpans) {
  using K = TypeParam;
  const FieldSpec F = spec<K>();
  for (std::uint64_t s = 0; s < 5; ++s) {
    Rng rng(trial_seed(31, s));
    RandomIdealShape shape;
    shape.homogeneous = true;
    shape.min_degree = 2;
    shape.nvars = 4;
    const auto I = random_ideal<K>(shape, rng, F);
    EXPECT_EQ(hf_of_homogeneous(I, TermOrder::degrevlex(), 7), raw_hilbert_function(I, 7));
    EXPECT_EQ(hf_of_homogeneous(I, TermOrder::lex(), 7), raw_hilbert_function(I, 7));
  }
}

TYPED_TEST(GroebnerTest, PowerMapPreservesBases) {
  using K = TypeParam;
  const FieldSpec F = spec<K>();
  RandomIdealShape shape;
  for (std::uint64_t s = 0; s < 8; ++s) {
    Rng rng(trial_seed(5, s));
    const auto J = random_ideal<K>(shape, rng, F);
    const PowerMap phi = random_power_map(3, 3, rng);
    const auto report = verify_poweli(J, phi, 2);
    EXPECT_TRUE(report.passed()) << report.to_text();
  }
}

}  // namespace
