#include "regcert/harness.hpp"

#include <algorithm>
#include <chrono>

#include "regcert/graded.hpp"

namespace regcert {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty sampling range");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

template <class K>
K random_coefficient(Rng& rng, const FieldSpec& field, std::int64_t bound) {
  if (!field.is_rational()) {
    return K(rng.between(1, static_cast<std::int64_t>(field.characteristic()) - 1), field);
  }
  std::int64_t v = rng.between(1, 2 * bound);
  return K(v <= bound ? v : bound - v, field);
}

namespace {

template <class K>
K small_coefficient(Rng& rng, const FieldSpec& field, std::int64_t bound) {
  const std::int64_t v = rng.between(1, 2 * bound);
  return K(v <= bound ? v : bound - v, field);
}

Monomial random_monomial(Rng& rng, std::size_t nvars, std::uint32_t degree) {
  return lex_unrank(nvars, degree,
                    static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(
                        monomial_count(nvars, degree)))));
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

bool reg_le(const Reg& a, const Reg& b) {
  if (!a) return true;
  if (!b) return false;
  return *a <= *b;
}

template <class K>
Reg reg_of(const IdealPresentation<K>& I) {
  if (I.is_zero()) return std::nullopt;
  return regularity(I);
}

Reg reg_of(const MonomialIdeal& M, const FieldSpec& field) {
  if (M.is_zero()) return std::nullopt;
  return regularity(M, field);
}

Reg stable_reg_of(const MonomialIdeal& M) {
  if (M.is_zero()) return std::nullopt;
  return stable_regularity(M);
}

json reg_json(const Reg& r) { return r ? json(*r) : json("-inf"); }

}  // namespace

std::string reg_text(const Reg& r) { return r ? std::to_string(*r) : "-inf"; }

template <class K>
Parametrisation<K> random_parametrisation(unsigned n, unsigned m, unsigned d, std::uint64_t seed,
                                          const FieldSpec& field) {
  if (n == 0 || m == 0 || d == 0) throw std::invalid_argument("n, m, d must be positive");
  Rng rng(seed);
  Parametrisation<K> p{n, m, d, field, {}};
  const auto monos = monomials_of_degree(m, d);
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Term<K>> terms;
    for (const auto& mono : monos) terms.push_back({random_coefficient<K>(rng, field), mono});
    p.f.push_back(Polynomial<K>::normalize(std::move(terms), m, TermOrder::lex(), field));
  }
  return p;
}

template <class K>
IdealPresentation<K> random_ideal(const RandomIdealShape& shape, Rng& rng, const FieldSpec& field) {
  const PolyRing ring = PolyRing::standard(shape.nvars, field);
  const std::size_t count = static_cast<std::size_t>(
      rng.between(static_cast<std::int64_t>(shape.min_generators),
                  static_cast<std::int64_t>(shape.max_generators)));
  std::vector<Polynomial<K>> gens;
  while (gens.size() < count) {
    const std::uint32_t top = static_cast<std::uint32_t>(rng.between(shape.min_degree, shape.max_degree));
    const std::size_t terms = static_cast<std::size_t>(
        rng.between(1, static_cast<std::int64_t>(shape.max_terms)));
    std::vector<Term<K>> ts;
    for (std::size_t t = 0; t < terms; ++t) {
      const std::uint32_t deg =
          shape.homogeneous ? top : static_cast<std::uint32_t>(rng.between(shape.min_degree, top));
      ts.push_back({small_coefficient<K>(rng, field, shape.coefficient_bound),
                    random_monomial(rng, shape.nvars, t == 0 ? top : deg)});
    }
    auto g = Polynomial<K>::normalize(std::move(ts), shape.nvars, TermOrder::lex(), field);
    if (!g.is_zero() && !g.is_constant()) gens.push_back(std::move(g));
  }
  return IdealPresentation<K>(ring, std::move(gens));
}

PowerMap random_power_map(std::size_t nvars, unsigned max_entry, Rng& rng) {
  std::vector<unsigned> e;
  for (std::size_t i = 0; i < nvars; ++i) e.push_back(static_cast<unsigned>(rng.between(1, max_entry)));
  return PowerMap(std::move(e));
}

// ---------------------------------------------------------------------------

template <class K>
VerificationReport verify_regflat(const IdealPresentation<K>& I, unsigned d) {
  return check_flat_betti(I, d);
}

template <class K>
void verify_regbound_into(VerificationReport& report, const IdealPresentation<K>& J,
                          std::size_t keep, LexSink* lex_ideals) {
  const auto start = std::chrono::steady_clock::now();
  InstanceResult inst;
  const std::string text = presentation_text(J) + " keep=" + std::to_string(keep);
  inst.digest = digest_of(text);
  inst.values["ideal"] = text;
  const FieldSpec& field = J.ring().field();
  try {
    if (!J.is_homogeneous()) throw std::invalid_argument("ideal is not homogeneous");
    if (keep == 0 || keep > J.ring().nvars()) throw std::invalid_argument("keep must be in 1..nvars");
    const GroebnerBasis<K> G = groebner_basis(J, TermOrder::lex());
    const GroebnerBasis<K> I = eliminate(G, keep);
    const MonomialIdeal inJ = initial_ideal(G);
    const MonomialIdeal inI = initial_ideal(I);
    inst.check(inI == inJ.intersect_subring(keep), "in(I) != in(J) cap R");
    std::string gens;
    for (const auto& g : I.elements) gens += (gens.empty() ? "" : ", ") + g.to_string(I.ring.names());
    inst.values["I"] = gens.empty() ? "0" : gens;

    const LexResult lex = lex_of_initial(inJ, J.max_degree());
    if (lex_ideals && lex.complete && !lex.ideal.is_zero()) lex_ideals->push_back(lex.ideal);
    const Reg r_I = reg_of(I.presentation());
    const Reg r_inI = reg_of(inI, field);
    const Reg r_inJ = reg_of(inJ, field);
    inst.values["reg_I"] = reg_json(r_I);
    inst.values["reg_in_I"] = reg_json(r_inI);
    inst.values["reg_in_J"] = reg_json(r_inJ);
    inst.check(reg_le(r_I, r_inI), "reg(I) > reg(in I)");
    inst.check(reg_le(r_inI, r_inJ), "reg(in I) > reg(in J)");
    if (!lex.complete) {
      inst.mark_inconclusive("Lex(J) incomplete at degree " + std::to_string(lex.computed_through));
    } else {
      const Reg r_lex = stable_reg_of(lex.ideal);
      inst.values["reg_lex_J"] = reg_json(r_lex);
      inst.bound["reg_lex_J"] = reg_json(r_lex);
      inst.check(reg_le(r_inJ, r_lex), "reg(in J) > reg(Lex J)");
      const std::uint32_t D = std::max<std::uint32_t>(J.max_degree() + 4, 8);
      const HilbertData raw = raw_hilbert_function(J, D);
      const HilbertData hin = hilbert_function(inJ, D);
      inst.values["hf_checked_through"] = D;
      inst.check(raw == hin, "HF(J) != HF(in J) by raw linear algebra");
      inst.check(hilbert_function(lex.ideal, D) == hin, "HF(Lex J) != HF(in J)");
    }
  } catch (const InconclusiveError& e) {
    inst.mark_inconclusive(e.what());
  } catch (const std::invalid_argument& e) {
    inst.check(false, e.what());
  }
  report.add(std::move(inst));
  report.add_timing("regbound", elapsed_ms(start));
}

template <class K>
VerificationReport verify_regbound(const IdealPresentation<K>& J, std::size_t keep,
                                   LexSink* lex_ideals) {
  VerificationReport report("regbound", J.ring().field());
  verify_regbound_into(report, J, keep, lex_ideals);
  return report;
}

template <class K>
void verify_main_into(VerificationReport& report, const Parametrisation<K>& p, LexSink* lex_ideals) {
  const auto start = std::chrono::steady_clock::now();
  InstanceResult inst;
  const std::string text = print(to_param_file(p));
  inst.digest = digest_of(text);
  inst.values["n"] = p.n;
  inst.values["m"] = p.m;
  inst.values["d"] = p.d;
  const std::int64_t d = p.d;
  try {
    const std::span<const Polynomial<K>> f(p.f);
    const GroebnerBasis<K> P = kernel_of_map(f);
    std::string gens;
    for (const auto& g : P.elements) {
      gens += (gens.empty() ? "" : ", ") + g.to_string(P.ring.names());
      inst.check(g.is_homogeneous(), "kernel element is not homogeneous: " + g.to_string(P.ring.names()));
      inst.check(compose(g, f).is_zero(), "g(f) != 0 for g = " + g.to_string(P.ring.names()));
    }
    inst.values["P"] = gens.empty() ? "0" : gens;
    const IdealPresentation<K> Pp = image_ideal(PowerMap::uniform(p.n, p.d), P.presentation());
    const Reg r_P = reg_of(P.presentation());
    const Reg r_Pp = reg_of(Pp);
    inst.values["reg_P"] = reg_json(r_P);
    inst.values["reg_P_prime"] = reg_json(r_Pp);

    // P' = J' cap R.
    const IdealPresentation<K> J = graph_ideal(f);
    const IdealPresentation<K> Jp = image_ideal(PowerMap::uniform(p.n + p.m, p.d, p.n), J);
    const GroebnerBasis<K> JpR = eliminate(groebner_basis(Jp, TermOrder::lex()), p.n);
    inst.check(ideal_equal(Pp, JpR.presentation(), TermOrder::lex()), "alpha(P)R != J' cap R");

    // G two ways.
    const LexResult closed = lex_of_complete_intersection(p.n, p.d, p.m);
    const std::int64_t G = stable_regularity(closed.ideal);
    const MonomialIdeal inJp = initial_ideal(groebner_basis(Jp, TermOrder::degrevlex()));
    const std::uint32_t D = static_cast<std::uint32_t>(G) + 2;
    inst.check(hilbert_function(inJp, D) == ci_hilbert_function(p.n, p.d, p.m, D),
               "J' does not have the complete-intersection Hilbert function");
    const LexResult actual = lex_of_initial(inJp, p.d);
    inst.values["G"] = G;
    if (!actual.complete) {
      inst.mark_inconclusive("Lex(J') incomplete at degree " + std::to_string(actual.computed_through));
    } else {
      if (lex_ideals) lex_ideals->push_back(actual.ideal);
      const std::int64_t G_actual = stable_regularity(actual.ideal);
      inst.values["G_actual"] = G_actual;
      inst.check(G == G_actual, "G from the series (" + std::to_string(G) + ") != G from J' (" +
                                    std::to_string(G_actual) + ")");
      inst.check(closed.ideal == actual.ideal, "Lex(J') differs from the closed-form Lex");
    }

    const auto bound = g_bound(p.n, p.d, p.m);
    inst.bound["d^(n2^(m-1))"] = *bound;
    inst.bound["d^(n2^(m-1)-1)"] = *bound / static_cast<std::uint64_t>(d);
    inst.check(!r_P || !r_Pp || d * *r_P <= *r_Pp,
               "reg(P) = " + reg_text(r_P) + " > reg(P')/d = " + reg_text(r_Pp) + "/" + std::to_string(d));
    inst.check(!r_Pp || *r_Pp <= G, "reg(P') = " + reg_text(r_Pp) + " > G = " + std::to_string(G));
    inst.check(static_cast<std::uint64_t>(G) <= *bound,
               "G = " + std::to_string(G) + " > d^(n2^(m-1)) = " + std::to_string(*bound));
  } catch (const InconclusiveError& e) {
    inst.mark_inconclusive(e.what());
  } catch (const std::invalid_argument& e) {
    inst.check(false, e.what());
  }
  report.add(std::move(inst));
  report.add_timing("main", elapsed_ms(start));
}

template <class K>
VerificationReport verify_main(const Parametrisation<K>& p, LexSink* lex_ideals) {
  VerificationReport report("main", p.field);
  verify_main_into(report, p, lex_ideals);
  return report;
}

namespace {

template <class K>
void gtable_actual(InstanceResult& inst, unsigned n, unsigned d, unsigned m, std::uint64_t seed,
                   const FieldSpec& field, const LexResult& closed, LexSink* lex_ideals) {
  const Parametrisation<K> p = random_parametrisation<K>(n, m, d, seed, field);
  const IdealPresentation<K> J = graph_ideal(std::span<const Polynomial<K>>(p.f));
  const IdealPresentation<K> Jp = image_ideal(PowerMap::uniform(n + m, d, n), J);
  const LexResult actual = lex_of_ideal(Jp);
  if (!actual.complete) {
    inst.mark_inconclusive("Lex(J') incomplete");
    return;
  }
  if (lex_ideals) lex_ideals->push_back(actual.ideal);
  const std::int64_t G_actual = stable_regularity(actual.ideal);
  inst.values["G_actual"] = G_actual;
  inst.check(actual.ideal == closed.ideal, "Lex(J') for an actual f differs from the closed form");
}

}  // namespace

VerificationReport gtable(GRange n, GRange d, GRange m, std::optional<std::uint64_t> seed,
                          const FieldSpec& field, LexSink* lex_ideals) {
  VerificationReport report("gtable", field, seed);
  std::uint64_t index = 0;
  for (unsigned nn = n.lo; nn <= n.hi; ++nn) {
    for (unsigned dd = d.lo; dd <= d.hi; ++dd) {
      for (unsigned mm = m.lo; mm <= m.hi; ++mm) {
        const auto start = std::chrono::steady_clock::now();
        InstanceResult inst;
        const std::string key = "G n=" + std::to_string(nn) + " d=" + std::to_string(dd) +
                                " m=" + std::to_string(mm);
        inst.digest = digest_of(key);
        inst.values["n"] = nn;
        inst.values["d"] = dd;
        inst.values["m"] = mm;
        const LexResult closed = lex_of_complete_intersection(nn, dd, mm);
        if (lex_ideals) lex_ideals->push_back(closed.ideal);
        const std::uint32_t G = stable_regularity(closed.ideal);
        inst.values["G"] = G;
        inst.values["generators"] = closed.ideal.size();
        if (const auto b = g_bound(nn, dd, mm)) {
          inst.bound["d^(n2^(m-1))"] = *b;
          inst.check(G <= *b, "G = " + std::to_string(G) + " exceeds " + std::to_string(*b));
        }
        if (seed) {
          const std::uint64_t s = trial_seed(*seed, index);
          if (field.is_rational()) {
            gtable_actual<Rational>(inst, nn, dd, mm, s, field, closed, lex_ideals);
          } else {
            gtable_actual<Zp>(inst, nn, dd, mm, s, field, closed, lex_ideals);
          }
        }
        ++index;
        report.add(std::move(inst));
        report.add_timing(key, elapsed_ms(start));
      }
    }
  }
  return report;
}

VerificationReport lex_cross_check(const LexSink& lex_ideals, const FieldSpec& field) {
  VerificationReport report("lex_koszul", field);
  std::vector<MonomialIdeal> unique;
  for (const auto& L : lex_ideals) {
    if (std::find(unique.begin(), unique.end(), L) == unique.end()) unique.push_back(L);
  }
  for (const auto& L : unique) {
    const auto start = std::chrono::steady_clock::now();
    InstanceResult inst;
    const std::string text = std::to_string(L.nvars()) + ":" + L.to_string({});
    inst.digest = digest_of(text);
    inst.values["nvars"] = L.nvars();
    inst.values["generators"] = L.size();
    inst.check(is_strongly_stable(L), "lex ideal is not strongly stable");
    if (L.is_zero() || L.is_unit()) {
      report.add(std::move(inst));
      continue;
    }
    const std::int64_t stable = stable_regularity(L);
    const BettiTable table = betti_table(L, field);
    const std::int64_t koszul = regularity(table);
    inst.values["stable_regularity"] = stable;
    inst.values["koszul_regularity"] = koszul;
    inst.check(stable == koszul, "stable regularity " + std::to_string(stable) +
                                     " != Koszul regularity " + std::to_string(koszul));
    inst.check(!euler_characteristic_mismatch(table, hilbert_numerator(L)),
               "alternating Betti sums disagree with the Hilbert series");
    report.add(std::move(inst));
    report.add_timing("koszul", elapsed_ms(start));
  }
  return report;
}

#define REGCERT_INSTANTIATE_HARNESS(K)                                                          \
  template K random_coefficient(Rng&, const FieldSpec&, std::int64_t);                          \
  template Parametrisation<K> random_parametrisation(unsigned, unsigned, unsigned,              \
                                                     std::uint64_t, const FieldSpec&);          \
  template IdealPresentation<K> random_ideal(const RandomIdealShape&, Rng&, const FieldSpec&);  \
  template VerificationReport verify_regflat(const IdealPresentation<K>&, unsigned);            \
  template void verify_regbound_into(VerificationReport&, const IdealPresentation<K>&,          \
                                     std::size_t, LexSink*);                                    \
  template VerificationReport verify_regbound(const IdealPresentation<K>&, std::size_t,         \
                                              LexSink*);                                        \
  template void verify_main_into(VerificationReport&, const Parametrisation<K>&, LexSink*);     \
  template VerificationReport verify_main(const Parametrisation<K>&, LexSink*);

REGCERT_INSTANTIATE_HARNESS(Zp)
REGCERT_INSTANTIATE_HARNESS(Rational)

}  // namespace regcert
