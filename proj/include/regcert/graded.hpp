#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "regcert/groebner.hpp"
#include "regcert/hilbert.hpp"
#include "regcert/lex.hpp"
#include "regcert/linalg.hpp"

namespace regcert {

/// R/I for a homogeneous I, graded piece by graded piece, in the basis of
/// standard monomials of in(I). Multiplication by a variable is computed by
/// normal forms against the Groebner basis and cached.
template <class K>
class GradedQuotient {
 public:
  explicit GradedQuotient(const GroebnerBasis<K>& basis);

  std::size_t nvars() const { return basis_.ring.nvars(); }
  const MonomialIdeal& initial() const { return initial_; }
  const std::vector<Monomial>& basis(std::uint32_t t) { return standard_.degree(t); }
  std::size_t dim(std::int64_t t) { return t < 0 ? 0 : basis(static_cast<std::uint32_t>(t)).size(); }
  /// Coordinates of x_k * basis(t)[idx] in basis(t + 1).
  const SparseRow<K>& multiply(std::size_t k, std::uint32_t t, std::size_t idx);

 private:
  GroebnerBasis<K> basis_;
  MonomialIdeal initial_;
  StandardMonomials standard_;
  std::vector<std::vector<std::optional<SparseRow<K>>>> products_;
};

/// HF of R/I via in(I) under `order`. Throws std::invalid_argument unless I is
/// homogeneous.
template <class K>
HilbertData hf_of_homogeneous(const IdealPresentation<K>& I, const TermOrder& order,
                              std::uint32_t D);

/// HF of R/I from the ranks of the spans of {m * g : deg m + deg g = t}; no
/// Groebner basis involved.
template <class K>
HilbertData raw_hilbert_function(const IdealPresentation<K>& I, std::uint32_t D);

/// Lex(I) from the Hilbert function of a homogeneous I. Completeness uses
/// Gotzmann persistence with I's generator degrees, extending the cutoff up
/// to `max_cutoff`; the result is incomplete only if that is too small.
template <class K>
LexResult lex_of_ideal(const IdealPresentation<K>& I, const TermOrder& order = TermOrder::degrevlex(),
                       std::uint32_t max_cutoff = 4096);

/// Same from a known initial ideal, with g bounding the generator degrees of
/// the original ideal.
LexResult lex_of_initial(const MonomialIdeal& initial, std::uint32_t g, std::uint32_t max_cutoff = 4096);

}  // namespace regcert
