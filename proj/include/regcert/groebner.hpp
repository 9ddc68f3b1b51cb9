#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "regcert/monomial_ideal.hpp"
#include "regcert/polynomial.hpp"
#include "regcert/report.hpp"

namespace regcert {

/// A finite generating set. Zero generators are dropped; an empty list
/// presents the zero ideal.
template <class K>
class IdealPresentation {
 public:
  IdealPresentation(PolyRing ring, std::vector<Polynomial<K>> generators);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const { return homogeneous_; }
  std::uint32_t max_degree() const;
  /// Generators re-sorted under `order`.
  std::vector<Polynomial<K>> generators_under(const TermOrder& order) const;

 private:
  PolyRing ring_;
  std::vector<Polynomial<K>> gens_;
  bool homogeneous_;
};

/// Canonical one-line text of a presentation; the input of report digests.
template <class K>
std::string presentation_text(const IdealPresentation<K>& I);

template <class K>
struct GroebnerBasis {
  PolyRing ring;
  TermOrder order;
  std::vector<Polynomial<K>> elements;
  bool reduced = false;
  /// When tracked: elements[i] = sum_k cofactors[i][k] * input[k].
  std::vector<std::vector<Polynomial<K>>> cofactors;

  bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
  IdealPresentation<K> presentation() const { return IdealPresentation<K>(ring, elements); }
};

struct BuchbergerOptions {
  enum class Selection { normal, fifo };
  /// Coprime-leading-monomial and chain criteria as pair skips.
  bool use_criteria = true;
  Selection selection = Selection::normal;
  bool track_cofactors = false;
};

template <class K>
struct Division {
  Polynomial<K> remainder;
  std::vector<Polynomial<K>> quotients;
};

/// f = sum q_i g_i + r, always reducing the largest reducible term by the
/// first divisor in list order.
template <class K>
Division<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors);

/// Remainder only.
template <class K>
Polynomial<K> reduce(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors);

/// Index pair whose S-polynomial does not reduce to zero, if any. Checks
/// every pair; no criteria.
template <class K>
std::optional<std::pair<std::size_t, std::size_t>> buchberger_criterion_witness(
    std::span<const Polynomial<K>> elements);

template <class K>
GroebnerBasis<K> buchberger(const IdealPresentation<K>& ideal, const TermOrder& order,
                            const BuchbergerOptions& options = {});

template <class K>
GroebnerBasis<K> reduce_basis(const GroebnerBasis<K>& basis);

/// buchberger followed by reduce_basis.
template <class K>
GroebnerBasis<K> groebner_basis(const IdealPresentation<K>& ideal, const TermOrder& order);

template <class K>
MonomialIdeal initial_ideal(const GroebnerBasis<K>& basis);

/// Elements lying in the first `keep` variables, as a basis over that
/// subring. Throws std::invalid_argument unless the order eliminates the rest.
template <class K>
GroebnerBasis<K> eliminate(const GroebnerBasis<K>& basis, std::size_t keep);

struct KernelOptions {
  /// Pure lex (default) or the block order with the y-block eliminated.
  bool use_block_order = false;
  /// Recompute under the other order and require identical results.
  bool cross_check = false;
};

/// Kernel P of K[x_1..x_n] -> K[y_1..y_m], x_i -> f_i, as the reduced lex
/// basis of (x_i - f_i) intersected with K[x]. Throws std::invalid_argument
/// unless the f_i are homogeneous of one positive degree.
template <class K>
GroebnerBasis<K> kernel_of_map(std::span<const Polynomial<K>> f,
                               const KernelOptions& options = {});

/// The graph ideal (x_i - f_i) in K[x_1..x_n, y_1..y_m] together with the ring.
template <class K>
IdealPresentation<K> graph_ideal(std::span<const Polynomial<K>> f);

template <class K>
IdealPresentation<K> image_ideal(const PowerMap& phi, const IdealPresentation<K>& ideal);

template <class K>
bool ideal_equal(const IdealPresentation<K>& a, const IdealPresentation<K>& b,
                 const TermOrder& order);

/// Checks under lex that phi maps a Groebner basis of J to one of phi(J)S,
/// and that alpha(J cap R)R equals phi(J)S cap R, where alpha = phi on R.
template <class K>
VerificationReport verify_poweli(const IdealPresentation<K>& J, const PowerMap& dvec,
                                 std::size_t keep);

/// Adds one verify_poweli instance to `report`.
template <class K>
void verify_poweli_into(VerificationReport& report, const IdealPresentation<K>& J,
                        const PowerMap& dvec, std::size_t keep);

}  // namespace regcert
