#pragma once

#include <cstdint>
#include <optional>

#include "regcert/hilbert.hpp"
#include "regcert/monomial_ideal.hpp"
#include "regcert/report.hpp"

namespace regcert {

/// Number of degree-deg(m) monomials strictly greater than m in lex.
std::int64_t lex_rank(const Monomial& m);
/// The degree-t monomial with the given lex rank (0 is x_l^t).
Monomial lex_unrank(std::size_t nvars, std::uint32_t t, std::int64_t rank);

struct LexResult {
  MonomialIdeal ideal;
  bool complete = false;
  /// Last degree whose segment was built.
  std::uint32_t computed_through = 0;
};

/// Lex(J) from J's Hilbert function: in each degree the largest dims_t
/// monomials. Without a generator-degree bound, completeness is the
/// persistence heuristic (no new generators in the top two degrees). With a
/// bound g on the degrees of J's generators, construction stops at the first
/// t > g reached by maximal growth, which Gotzmann persistence makes final.
/// Throws std::domain_error when the data is not a Hilbert function.
LexResult lex_segment_ideal(const HilbertData& h,
                            std::optional<std::uint32_t> generator_degree_bound = std::nullopt);

/// Checks Macaulay's condition degree by degree: the degree-(i+1) segment
/// must contain every variable multiple of the degree-i segment.
VerificationReport segment_closure_check(const HilbertData& h);

bool is_strongly_stable(const MonomialIdeal& M);

/// Maximal generator degree of a strongly stable ideal (its regularity).
/// Throws std::invalid_argument for unstable, zero or unit ideals.
std::uint32_t stable_regularity(const MonomialIdeal& M);

/// d^(n 2^(m-1)) for m >= 1; nullopt for m = 0 where the exponent is not an
/// integer. Throws std::overflow_error past 64 bits.
std::optional<std::uint64_t> g_bound(unsigned n, unsigned d, unsigned m);

/// Lex ideal of the Hilbert function of n generic forms of degree d in n+m
/// variables. Throws std::logic_error if the segment is not complete at the
/// guaranteed cutoff.
LexResult lex_of_complete_intersection(unsigned n, unsigned d, unsigned m);

/// G_{n,d,m} = reg(Lex) of the complete-intersection Hilbert function.
std::uint32_t compute_G(unsigned n, unsigned d, unsigned m);

}  // namespace regcert
