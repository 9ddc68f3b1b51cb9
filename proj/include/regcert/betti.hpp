#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regcert/groebner.hpp"
#include "regcert/hilbert.hpp"
#include "regcert/monomial_ideal.hpp"
#include "regcert/report.hpp"

namespace regcert {

/// A regularity or Betti value that could not be certified within the cutoff.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graded Betti numbers beta_{i,j}(I) of an ideal (ideal side: i = 0 counts
/// minimal generators). Entries with j > certified_through are unknown.
struct BettiTable {
  std::size_t nvars = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> entries;
  bool certified = true;
  std::uint32_t certified_through = 0;

  std::uint64_t entry(std::uint32_t i, std::uint32_t j) const;
  void add(std::uint32_t i, std::uint32_t j, std::uint64_t value);
  /// max{j - i}; nullopt for the zero ideal.
  std::optional<std::int64_t> reg() const;
  /// Largest i with a nonzero entry; nullopt for the zero ideal.
  std::optional<std::uint32_t> pdim() const;
  /// beta_{i,j}(R/I): shifted by one, plus beta_{0,0}(R/I) = 1.
  std::uint64_t quotient_entry(std::uint32_t i, std::uint32_t j) const;

  /// Rows j - i, columns i, in the usual layout.
  std::string to_string() const;
  json to_json() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Fine-graded Koszul homology of R/M. Only multidegrees in the lcm lattice
/// can carry homology and all of them divide lcm(M), so the table is
/// certified through deg lcm(M) (or through max_degree when that is smaller,
/// in which case it is marked uncertified).
BettiTable betti_table(const MonomialIdeal& M, const FieldSpec& field = FieldSpec(),
                       std::optional<std::uint32_t> max_degree = std::nullopt);

/// Betti table of a homogeneous ideal. Monomial presentations use the
/// fine-graded path. Otherwise r = reg(in I) is computed first and the
/// Koszul complex of R/I is evaluated in degrees j <= r + i, which contains
/// every nonzero beta_{i,j}(I) since reg(I) <= reg(in I).
template <class K>
BettiTable betti_table(const IdealPresentation<K>& I, const TermOrder& order = TermOrder::degrevlex(),
                       std::optional<std::uint32_t> max_degree = std::nullopt);

/// dim H_i(x; R/M)_j = beta_{i,j}(R/M).
std::uint64_t koszul_homology_rank(const MonomialIdeal& M, std::uint32_t i, std::uint32_t j,
                                   const FieldSpec& field = FieldSpec());
template <class K>
std::uint64_t koszul_homology_rank(const IdealPresentation<K>& I, std::uint32_t i, std::uint32_t j,
                                   const TermOrder& order = TermOrder::degrevlex());

/// Ideal-side regularity. Throws std::invalid_argument for the zero or unit
/// ideal and InconclusiveError for an uncertified table.
std::int64_t regularity(const BettiTable& table);
std::int64_t regularity(const MonomialIdeal& M, const FieldSpec& field = FieldSpec());
template <class K>
std::int64_t regularity(const IdealPresentation<K>& I, const TermOrder& order = TermOrder::degrevlex());

struct TInvariants {
  /// t_i = max{j : beta_{i,j} != 0} for i = 0..pdim.
  std::vector<std::uint32_t> t;
  /// Largest i with reg = t_i - i.
  std::uint32_t p = 0;
};

/// Throws std::invalid_argument for the zero ideal, InconclusiveError when
/// uncertified.
TInvariants t_invariants(const BettiTable& table);

/// Compares the alternating Betti sums degree by degree with the numerator
/// of the Hilbert series of R/I; returns the first mismatching degree.
std::optional<std::uint32_t> euler_characteristic_mismatch(const BettiTable& table,
                                                           const SeriesNumerator& numerator);

/// Compares beta(I) and beta(I') for I' = alpha(I)R, alpha uniform of
/// degree d, and checks t_i(I') = d t_i(I), the inequality
/// reg(I') >= d reg(I) + p (d - 1), and reg(I) <= reg(I')/d.
template <class K>
VerificationReport check_flat_betti(const IdealPresentation<K>& I, unsigned d,
                                    const TermOrder& order = TermOrder::degrevlex());
template <class K>
void check_flat_betti_into(VerificationReport& report, const IdealPresentation<K>& I, unsigned d,
                           const TermOrder& order = TermOrder::degrevlex());

/// Rows of the comparison used by check_flat_betti, exposed so that fault
/// injection can exercise the verdict logic on fabricated tables.
void compare_flat_tables(InstanceResult& inst, const BettiTable& base, const BettiTable& image,
                         unsigned d);

}  // namespace regcert
