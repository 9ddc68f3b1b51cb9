#pragma once

#include <cstdint>
#include <vector>

#include "regcert/monomial_ideal.hpp"

namespace regcert {

/// Degreewise dimensions dims[0..cutoff] of R/I (quotient side) or of I
/// (ideal side), for R with `nvars` variables.
struct HilbertData {
  enum class Side { quotient, ideal };

  std::vector<std::int64_t> dims;
  Side side = Side::quotient;
  std::size_t nvars = 0;

  std::uint32_t cutoff() const { return static_cast<std::uint32_t>(dims.size()) - 1; }
  HilbertData to_ideal_side() const;
  HilbertData to_quotient_side() const;

  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

/// Integer polynomial in t, coefficient i at index i.
using SeriesNumerator = std::vector<std::int64_t>;

/// K(t) with HS(R/M) = K(t) / (1-t)^nvars, by pivot-variable recursion
/// (R/M ~> R/(M + x) and R/(M : x) shifted by one).
SeriesNumerator hilbert_numerator(const MonomialIdeal& M);

/// Quotient-side Hilbert function for degrees 0..D from a series numerator.
HilbertData series_to_hilbert(const SeriesNumerator& numerator, std::size_t nvars,
                              std::uint32_t D);

HilbertData hilbert_function(const MonomialIdeal& M, std::uint32_t D);

/// Coefficients of (1 - t^d)^n / (1 - t)^(n+m) up to degree D.
HilbertData ci_hilbert_function(unsigned n, unsigned d, unsigned m, std::uint32_t D);

/// One summand C(top, bottom) of a Macaulay representation.
struct BinomialTerm {
  std::int64_t top;
  std::int64_t bottom;
  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// h = C(k_t, t) + C(k_{t-1}, t-1) + ... with k_t > k_{t-1} > ... >= bottom >= 1.
std::vector<BinomialTerm> macaulay_representation(std::int64_t h, std::int64_t t);
/// h^<t>: the largest possible quotient dimension in degree t+1 given h in degree t.
std::int64_t macaulay_growth(std::int64_t h, std::int64_t t);

}  // namespace regcert
