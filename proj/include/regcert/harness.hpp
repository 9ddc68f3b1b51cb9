#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "regcert/betti.hpp"
#include "regcert/io.hpp"
#include "regcert/lex.hpp"

namespace regcert {

/// Seeded generator with its own bounded sampling, so that a seed produces
/// the same instances with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Seed of trial `index` in a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Nonzero coefficient: uniform over GF(p)^*, or a uniform nonzero integer in
/// [-bound, bound] over QQ.
template <class K>
K random_coefficient(Rng& rng, const FieldSpec& field, std::int64_t bound = 9);

/// Dense forms: every degree-d monomial in y_1..y_m gets a random nonzero
/// coefficient.
template <class K>
Parametrisation<K> random_parametrisation(unsigned n, unsigned m, unsigned d, std::uint64_t seed,
                                          const FieldSpec& field);

struct RandomIdealShape {
  std::size_t nvars = 3;
  std::size_t min_generators = 2;
  std::size_t max_generators = 3;
  /// Every term has degree >= min_degree, so min_degree >= 1 keeps the
  /// ideal proper.
  std::uint32_t min_degree = 1;
  std::uint32_t max_degree = 3;
  std::size_t max_terms = 3;
  bool homogeneous = false;
  /// Coefficients are nonzero integers in [-bound, bound] in every field.
  std::int64_t coefficient_bound = 9;
};

template <class K>
IdealPresentation<K> random_ideal(const RandomIdealShape& shape, Rng& rng, const FieldSpec& field);

/// Exponents uniform in 1..max_entry.
PowerMap random_power_map(std::size_t nvars, unsigned max_entry, Rng& rng);

/// Receives every lex-segment ideal built by a verification run.
using LexSink = std::vector<MonomialIdeal>;

/// Regularity with -infinity for the zero ideal.
using Reg = std::optional<std::int64_t>;
std::string reg_text(const Reg& r);

/// check_flat_betti under its report name.
template <class K>
VerificationReport verify_regflat(const IdealPresentation<K>& I, unsigned d);

/// I = J cap R for the first `keep` variables, via a lex basis of J. Checks
/// reg(I) <= reg(in I) <= reg(in J) <= reg(Lex J) link by link, in(I) =
/// in(J) cap R, HF(J) = HF(in J) against raw linear algebra, and HF(Lex J) =
/// HF(in J).
template <class K>
void verify_regbound_into(VerificationReport& report, const IdealPresentation<K>& J,
                          std::size_t keep, LexSink* lex_ideals = nullptr);
template <class K>
VerificationReport verify_regbound(const IdealPresentation<K>& J, std::size_t keep,
                                   LexSink* lex_ideals = nullptr);

/// Kernel P of the parametrisation, P' = alpha(P)R, J' = (x_i^d - f_i), and
/// the chain reg(P) <= reg(P')/d <= G/d <= d^(n 2^(m-1) - 1), with G computed
/// from the closed-form series and again from the actual J'. Also checks
/// P' = J' cap R and that J' has the complete-intersection Hilbert function.
template <class K>
void verify_main_into(VerificationReport& report, const Parametrisation<K>& p,
                      LexSink* lex_ideals = nullptr);
template <class K>
VerificationReport verify_main(const Parametrisation<K>& p, LexSink* lex_ideals = nullptr);

/// One instance per (n, d, m): G_{n,d,m}, the bound when m >= 1, and, when
/// `seed` is given, the Lex ideal of an actual J' built from a random f,
/// which must coincide with the closed-form one.
struct GRange {
  unsigned lo;
  unsigned hi;
};
VerificationReport gtable(GRange n, GRange d, GRange m, std::optional<std::uint64_t> seed,
                          const FieldSpec& field, LexSink* lex_ideals = nullptr);

/// stable_regularity(L) == regularity(L) from Koszul homology.
VerificationReport lex_cross_check(const LexSink& lex_ideals, const FieldSpec& field);

}  // namespace regcert
