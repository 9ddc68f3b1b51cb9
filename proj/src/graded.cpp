#include "regcert/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace regcert {

template <class K>
GradedQuotient<K>::GradedQuotient(const GroebnerBasis<K>& basis)
    : basis_(basis), initial_(initial_ideal(basis)), standard_(initial_) {}

template <class K>
const SparseRow<K>& GradedQuotient<K>::multiply(std::size_t k, std::uint32_t t, std::size_t idx) {
  if (products_.size() <= t) products_.resize(t + 1);
  auto& slot = products_[t];
  const std::size_t n = nvars();
  if (slot.empty()) slot.resize(basis(t).size() * n);
  auto& cached = slot[idx * n + k];
  if (cached) return *cached;
  const FieldSpec& field = basis_.ring.field();
  const Monomial m = basis(t)[idx] * Monomial::variable(n, k);
  const auto nf = reduce(Polynomial<K>::monomial(K::one(field), m, basis_.order, field),
                         std::span<const Polynomial<K>>(basis_.elements));
  std::vector<std::pair<std::uint32_t, K>> row;
  for (const auto& term : nf.terms()) {
    const std::int64_t pos = standard_.index_of(term.mono);
    if (pos < 0) throw std::logic_error("normal form left the standard monomials");
    row.emplace_back(static_cast<std::uint32_t>(pos), term.coeff);
  }
  cached = make_row(std::move(row));
  return *cached;
}

template <class K>
HilbertData hf_of_homogeneous(const IdealPresentation<K>& I, const TermOrder& order,
                              std::uint32_t D) {
  if (!I.is_homogeneous()) throw std::invalid_argument("Hilbert function needs a homogeneous ideal");
  if (I.is_zero()) return hilbert_function(MonomialIdeal(I.ring().nvars()), D);
  return hilbert_function(initial_ideal(groebner_basis(I, order)), D);
}

template <class K>
HilbertData raw_hilbert_function(const IdealPresentation<K>& I, std::uint32_t D) {
  if (!I.is_homogeneous()) throw std::invalid_argument("Hilbert function needs a homogeneous ideal");
  const std::size_t n = I.ring().nvars();
  const TermOrder order = TermOrder::degrevlex();
  HilbertData h;
  h.nvars = n;
  h.side = HilbertData::Side::quotient;
  for (std::uint32_t t = 0; t <= D; ++t) {
    const auto monos = monomials_of_degree(n, t);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> column;
    for (std::uint32_t c = 0; c < monos.size(); ++c) column.emplace(monos[c], c);
    std::vector<SparseRow<K>> rows;
    for (const auto& g : I.generators_under(order)) {
      const std::uint32_t e = g.total_degree();
      if (e > t) continue;
      for (const auto& m : monomials_of_degree(n, t - e)) {
        std::vector<std::pair<std::uint32_t, K>> row;
        for (const auto& term : g.terms()) row.emplace_back(column.at(term.mono * m), term.coeff);
        rows.push_back(make_row(std::move(row)));
      }
    }
    h.dims.push_back(static_cast<std::int64_t>(monos.size() - sparse_rank(std::move(rows))));
  }
  return h;
}

LexResult lex_of_initial(const MonomialIdeal& initial, std::uint32_t g, std::uint32_t max_cutoff) {
  const std::size_t n = initial.nvars();
  if (initial.is_zero()) return {MonomialIdeal(n), true, 0};
  const SeriesNumerator num = hilbert_numerator(initial);
  std::uint32_t D = std::max<std::uint32_t>(g + 2, 32);
  while (true) {
    D = std::min(D, max_cutoff);
    LexResult r = lex_segment_ideal(series_to_hilbert(num, n, D), g);
    if (r.complete || D >= max_cutoff) return r;
    D *= 2;
  }
}

template <class K>
LexResult lex_of_ideal(const IdealPresentation<K>& I, const TermOrder& order,
                       std::uint32_t max_cutoff) {
  if (!I.is_homogeneous()) throw std::invalid_argument("Lex needs a homogeneous ideal");
  if (I.is_zero()) return {MonomialIdeal(I.ring().nvars()), true, 0};
  return lex_of_initial(initial_ideal(groebner_basis(I, order)), I.max_degree(), max_cutoff);
}

template class GradedQuotient<Zp>;
template class GradedQuotient<Rational>;
template HilbertData hf_of_homogeneous(const IdealPresentation<Zp>&, const TermOrder&, std::uint32_t);
template HilbertData hf_of_homogeneous(const IdealPresentation<Rational>&, const TermOrder&,
                                       std::uint32_t);
template HilbertData raw_hilbert_function(const IdealPresentation<Zp>&, std::uint32_t);
template HilbertData raw_hilbert_function(const IdealPresentation<Rational>&, std::uint32_t);
template LexResult lex_of_ideal(const IdealPresentation<Zp>&, const TermOrder&, std::uint32_t);
template LexResult lex_of_ideal(const IdealPresentation<Rational>&, const TermOrder&, std::uint32_t);

}  // namespace regcert
