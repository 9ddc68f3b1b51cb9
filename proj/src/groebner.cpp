#include "regcert/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace regcert {

template <class K>
std::string presentation_text(const IdealPresentation<K>& I) {
  std::string out;
  for (const auto& n : I.ring().names()) out += n + " ";
  out += "| " + I.ring().field().name() + " |";
  for (const auto& g : I.generators()) out += " " + g.to_string(I.ring().names()) + ",";
  return out;
}

namespace {

template <class K>
Polynomial<K> zero_like(const Polynomial<K>& p) {
  return Polynomial<K>(p.nvars(), p.order(), p.field());
}

}  // namespace

// ---------------------------------------------------------------------------
// IdealPresentation

template <class K>
IdealPresentation<K>::IdealPresentation(PolyRing ring, std::vector<Polynomial<K>> generators)
    : ring_(std::move(ring)), homogeneous_(true) {
  for (auto& g : generators) {
    if (g.nvars() != ring_.nvars()) throw std::invalid_argument("generator from a different ring");
    if (g.is_zero()) continue;
    homogeneous_ = homogeneous_ && g.is_homogeneous();
    gens_.push_back(std::move(g));
  }
}

template <class K>
std::uint32_t IdealPresentation<K>::max_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.total_degree());
  return d;
}

template <class K>
std::vector<Polynomial<K>> IdealPresentation<K>::generators_under(const TermOrder& order) const {
  std::vector<Polynomial<K>> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.with_order(order));
  return out;
}

// ---------------------------------------------------------------------------
// Division

template <class K>
Division<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors) {
  for (const auto& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  }
  Division<K> out{zero_like(f), {}};
  out.quotients.assign(divisors.size(), zero_like(f));
  Polynomial<K> p = f;
  while (!p.is_zero()) {
    const Term<K> lt = p.leading_term();
    std::size_t i = 0;
    while (i < divisors.size() && !divisors[i].leading_monomial().divides(lt.mono)) ++i;
    if (i < divisors.size()) {
      const K c = lt.coeff / divisors[i].leading_coefficient();
      const Monomial m = lt.mono / divisors[i].leading_monomial();
      p.add_scaled(-c, m, divisors[i]);
      out.quotients[i].append_term({c, m});
    } else {
      out.remainder.append_term(lt);
      p = p.tail();
    }
  }
  return out;
}

template <class K>
Polynomial<K> reduce(const Polynomial<K>& f, std::span<const Polynomial<K>> divisors) {
  Polynomial<K> rem = zero_like(f);
  Polynomial<K> p = f;
  while (!p.is_zero()) {
    const Term<K>& lt = p.leading_term();
    const Polynomial<K>* hit = nullptr;
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(lt.mono)) {
        hit = &g;
        break;
      }
    }
    if (hit) {
      const K c = lt.coeff / hit->leading_coefficient();
      const Monomial m = lt.mono / hit->leading_monomial();
      p.add_scaled(-c, m, *hit);
    } else {
      rem.append_term(lt);
      p = p.tail();
    }
  }
  return rem;
}

template <class K>
std::optional<std::pair<std::size_t, std::size_t>> buchberger_criterion_witness(
    std::span<const Polynomial<K>> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!reduce(s_polynomial(elements[i], elements[j]), elements).is_zero()) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct PairEntry {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t serial;
};

template <class K>
class BuchbergerRun {
 public:
  BuchbergerRun(const IdealPresentation<K>& ideal, const TermOrder& order,
                const BuchbergerOptions& options)
      : ideal_(ideal), order_(order), options_(options) {}

  GroebnerBasis<K> run() {
    const auto inputs = ideal_.generators_under(order_);
    GroebnerBasis<K> out{ideal_.ring(), order_, {}, false, {}};
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      std::vector<Polynomial<K>> cof;
      if (options_.track_cofactors) {
        cof.assign(inputs.size(), zero_like(inputs[k]));
        cof[k] = Polynomial<K>::constant(K::one(inputs[k].field()), inputs[k].nvars(), order_,
                                         inputs[k].field());
      }
      if (add(inputs[k], std::move(cof))) return unit_result(out);
    }
    while (!pairs_.empty()) {
      const PairEntry pair = pop();
      pending_[pair.i][pair.j] = false;
      if (options_.use_criteria && skip(pair)) continue;
      const Polynomial<K> s = s_polynomial(elements_[pair.i], elements_[pair.j]);
      if (!options_.track_cofactors) {
        if (add(reduce(s, std::span<const Polynomial<K>>(elements_)), {})) return unit_result(out);
        continue;
      }
      auto div = normal_form(s, std::span<const Polynomial<K>>(elements_));
      const auto& gi = elements_[pair.i];
      const auto& gj = elements_[pair.j];
      const Monomial mi = pair.lcm / gi.leading_monomial();
      const Monomial mj = pair.lcm / gj.leading_monomial();
      const K ci = gi.leading_coefficient().inverse();
      const K cj = gj.leading_coefficient().inverse();
      std::vector<Polynomial<K>> cof;
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        Polynomial<K> c = cofactors_[pair.i][k].scaled(ci, mi);
        c.add_scaled(-cj, mj, cofactors_[pair.j][k]);
        for (std::size_t e = 0; e < elements_.size(); ++e) {
          c -= div.quotients[e] * cofactors_[e][k];
        }
        cof.push_back(std::move(c));
      }
      if (add(div.remainder, std::move(cof))) return unit_result(out);
    }
    out.elements = elements_;
    out.cofactors = cofactors_;
    return out;
  }

 private:
  // Returns true when the ideal turned out to be the unit ideal.
  bool add(const Polynomial<K>& p, std::vector<Polynomial<K>> cof) {
    if (p.is_zero()) return false;
    const K inv = p.leading_coefficient().inverse();
    Polynomial<K> g = p.monic();
    if (options_.track_cofactors) {
      const Monomial one(g.nvars());
      for (auto& c : cof) c = c.scaled(inv, one);
    }
    const std::size_t idx = elements_.size();
    for (auto& row : pending_) row.push_back(false);
    pending_.emplace_back(idx + 1, false);
    for (std::size_t i = 0; i < idx; ++i) {
      pending_[i][idx] = true;
      pairs_.push_back(
          {i, idx, lcm(elements_[i].leading_monomial(), g.leading_monomial()), serial_++});
    }
    const bool unit = g.is_constant();
    elements_.push_back(std::move(g));
    cofactors_.push_back(std::move(cof));
    return unit;
  }

  GroebnerBasis<K> unit_result(GroebnerBasis<K>& out) {
    out.elements = {elements_.back()};
    if (options_.track_cofactors) out.cofactors = {cofactors_.back()};
    out.reduced = true;
    return out;
  }

  PairEntry pop() {
    std::size_t best = 0;
    if (options_.selection == BuchbergerOptions::Selection::normal) {
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (before(pairs_[k], pairs_[best])) best = k;
      }
    }
    PairEntry p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  // Normal strategy: lcm degree, then the order on lcms, then creation order.
  bool before(const PairEntry& a, const PairEntry& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    const auto c = compare(order_, a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return a.serial < b.serial;
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return a < b ? pending_[a][b] : pending_[b][a];
  }

  bool skip(const PairEntry& pair) const {
    if (coprime(elements_[pair.i].leading_monomial(), elements_[pair.j].leading_monomial())) {
      return true;
    }
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!elements_[k].leading_monomial().divides(pair.lcm)) continue;
      if (!is_pending(pair.i, k) && !is_pending(pair.j, k)) return true;
    }
    return false;
  }

  const IdealPresentation<K>& ideal_;
  TermOrder order_;
  BuchbergerOptions options_;
  std::vector<Polynomial<K>> elements_;
  std::vector<std::vector<Polynomial<K>>> cofactors_;
  std::vector<std::vector<bool>> pending_;
  std::vector<PairEntry> pairs_;
  std::uint64_t serial_ = 0;
};

}  // namespace

template <class K>
GroebnerBasis<K> buchberger(const IdealPresentation<K>& ideal, const TermOrder& order,
                            const BuchbergerOptions& options) {
  if (order.kind() == TermOrder::Kind::block && order.eliminated() > ideal.ring().nvars()) {
    throw std::invalid_argument("block order eliminates more variables than the ring has");
  }
  return BuchbergerRun<K>(ideal, order, options).run();
}

template <class K>
GroebnerBasis<K> reduce_basis(const GroebnerBasis<K>& basis) {
  GroebnerBasis<K> out{basis.ring, basis.order, {}, true, {}};
  std::vector<Polynomial<K>> sorted;
  for (const auto& g : basis.elements) {
    if (!g.is_zero()) sorted.push_back(g.monic());
  }
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    return compare(basis.order, a.leading_monomial(), b.leading_monomial()) ==
           std::strong_ordering::less;
  });
  std::vector<Polynomial<K>> minimal;
  for (const auto& g : sorted) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto& h) {
      return h.leading_monomial().divides(g.leading_monomial());
    });
    if (!redundant) minimal.push_back(g);
  }
  for (const auto& g : minimal) {
    Polynomial<K> r = reduce(g.tail(), std::span<const Polynomial<K>>(minimal));
    Polynomial<K> head =
        Polynomial<K>::monomial(g.leading_coefficient(), g.leading_monomial(), g.order(), g.field());
    out.elements.push_back(head + r);
  }
  std::sort(out.elements.begin(), out.elements.end(), [&](const auto& a, const auto& b) {
    return compare(basis.order, a.leading_monomial(), b.leading_monomial()) ==
           std::strong_ordering::greater;
  });
  return out;
}

template <class K>
GroebnerBasis<K> groebner_basis(const IdealPresentation<K>& ideal, const TermOrder& order) {
  return reduce_basis(buchberger(ideal, order));
}

template <class K>
MonomialIdeal initial_ideal(const GroebnerBasis<K>& basis) {
  std::vector<Monomial> lms;
  for (const auto& g : basis.elements) lms.push_back(g.leading_monomial());
  return MonomialIdeal(basis.ring.nvars(), std::move(lms));
}

template <class K>
GroebnerBasis<K> eliminate(const GroebnerBasis<K>& basis, std::size_t keep) {
  const std::size_t n = basis.ring.nvars();
  if (!basis.order.eliminates(n, keep)) {
    throw std::invalid_argument(basis.order.to_string() + " does not eliminate x" +
                                std::to_string(keep + 1) + "..x" + std::to_string(n));
  }
  if (keep == n) return basis;
  GroebnerBasis<K> out{basis.ring.subring(keep), basis.order.restricted(n, keep), {},
                       basis.reduced, {}};
  for (const auto& g : basis.elements) {
    if (g.lies_in_first(keep)) out.elements.push_back(g.project(keep));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernels and images

namespace {

template <class K>
unsigned check_parametrisation(std::span<const Polynomial<K>> f) {
  if (f.empty()) throw std::invalid_argument("parametrisation needs at least one form");
  const std::size_t m = f.front().nvars();
  std::optional<std::uint32_t> degree;
  for (const auto& fi : f) {
    if (fi.nvars() != m) throw std::invalid_argument("forms live in different rings");
    if (fi.is_zero()) continue;
    const auto [homog, d] = fi.homogeneity();
    if (!homog) throw std::invalid_argument("parametrisation form is not homogeneous");
    if (degree && *d != *degree) throw std::invalid_argument("forms have different degrees");
    degree = d;
  }
  if (!degree) throw std::invalid_argument("all forms are zero");
  if (*degree == 0) throw std::invalid_argument("forms must have positive degree");
  return *degree;
}

}  // namespace

template <class K>
IdealPresentation<K> graph_ideal(std::span<const Polynomial<K>> f) {
  check_parametrisation(f);
  const std::size_t n = f.size();
  const std::size_t m = f.front().nvars();
  const FieldSpec field = f.front().field();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < m; ++i) names.push_back("y" + std::to_string(i + 1));
  PolyRing ring(std::move(names), field, n);
  const TermOrder lex = TermOrder::lex();
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial<K> g = Polynomial<K>::monomial(K::one(field), Monomial::variable(n + m, i), lex, field);
    g -= f[i].embed(n + m, n, lex);
    gens.push_back(std::move(g));
  }
  return IdealPresentation<K>(std::move(ring), std::move(gens));
}

namespace {

template <class K>
GroebnerBasis<K> kernel_under(const IdealPresentation<K>& J, std::size_t n, std::size_t m,
                              bool block) {
  const TermOrder order = block ? TermOrder::block(m) : TermOrder::lex();
  GroebnerBasis<K> kernel = eliminate(groebner_basis(J, order), n);
  if (block) kernel = groebner_basis(kernel.presentation(), TermOrder::lex());
  return kernel;
}

}  // namespace

template <class K>
GroebnerBasis<K> kernel_of_map(std::span<const Polynomial<K>> f, const KernelOptions& options) {
  const IdealPresentation<K> J = graph_ideal(f);
  const std::size_t n = f.size();
  const std::size_t m = f.front().nvars();
  GroebnerBasis<K> kernel = kernel_under(J, n, m, options.use_block_order);
  if (options.cross_check) {
    const GroebnerBasis<K> other = kernel_under(J, n, m, !options.use_block_order);
    if (!(other.elements == kernel.elements)) {
      throw std::logic_error("lex and block elimination disagree on the kernel");
    }
  }
  for (const auto& g : kernel.elements) {
    if (!g.is_homogeneous()) throw std::logic_error("kernel element is not homogeneous");
  }
  return kernel;
}

template <class K>
IdealPresentation<K> image_ideal(const PowerMap& phi, const IdealPresentation<K>& ideal) {
  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(apply_power_map(phi, g));
  return IdealPresentation<K>(ideal.ring(), std::move(gens));
}

template <class K>
bool ideal_equal(const IdealPresentation<K>& a, const IdealPresentation<K>& b,
                 const TermOrder& order) {
  if (a.ring().nvars() != b.ring().nvars()) throw std::invalid_argument("ideals in different rings");
  return groebner_basis(a, order).elements == groebner_basis(b, order).elements;
}

// ---------------------------------------------------------------------------
// Power maps and elimination

template <class K>
void verify_poweli_into(VerificationReport& report, const IdealPresentation<K>& J,
                        const PowerMap& dvec, std::size_t keep) {
  const std::size_t n = J.ring().nvars();
  if (dvec.size() != n) throw std::invalid_argument("power map must act on every variable");
  if (keep == 0 || keep > n) throw std::invalid_argument("keep must be in 1..nvars");
  const TermOrder lex = TermOrder::lex();
  const auto& names = J.ring().names();

  InstanceResult inst;
  std::string text = presentation_text(J) + " d=";
  for (unsigned d : dvec.degrees()) text += std::to_string(d) + ",";
  text += " keep=" + std::to_string(keep);
  inst.digest = digest_of(text);
  inst.values["ideal"] = text;

  const GroebnerBasis<K> G = groebner_basis(J, lex);
  std::vector<Polynomial<K>> phiG;
  for (const auto& g : G.elements) {
    phiG.push_back(apply_power_map(dvec, g));
    inst.check(phiG.back().leading_monomial() == dvec.apply(g.leading_monomial()),
               "in(phi(g)) != phi(in(g)) for g = " + g.to_string(names));
  }
  inst.values["basis_size"] = G.elements.size();

  // (i) phi(G) passes the Buchberger criterion and generates phi(J)S.
  const auto witness = buchberger_criterion_witness(std::span<const Polynomial<K>>(phiG));
  if (witness) {
    inst.check(false, "S(phi(g" + std::to_string(witness->first) + "), phi(g" +
                          std::to_string(witness->second) + ")) does not reduce to 0");
  }
  const IdealPresentation<K> Jp = image_ideal(dvec, J);
  for (const auto& f : Jp.generators_under(lex)) {
    inst.check(reduce(f, std::span<const Polynomial<K>>(phiG)).is_zero(),
               "phi(J) generator outside the span of phi(G): " + f.to_string(names));
  }
  inst.values["criterion_pairs"] = phiG.size() * (phiG.size() - (phiG.empty() ? 0 : 1)) / 2;

  // (ii) alpha(J cap R)R = phi(J)S cap R, the right side from an independent run.
  const GroebnerBasis<K> I = eliminate(G, keep);
  const PowerMap alpha = dvec.restricted(keep);
  std::vector<Polynomial<K>> alpha_gens;
  for (const auto& g : I.elements) alpha_gens.push_back(apply_power_map(alpha, g));
  const IdealPresentation<K> lhs(I.ring, std::move(alpha_gens));
  const GroebnerBasis<K> rhs = eliminate(groebner_basis(Jp, lex), keep);
  inst.values["elimination_size"] = I.elements.size();
  inst.check(ideal_equal(lhs, rhs.presentation(), lex), "alpha(J cap R)R != phi(J)S cap R");
  report.add(std::move(inst));
}

template <class K>
VerificationReport verify_poweli(const IdealPresentation<K>& J, const PowerMap& dvec,
                                 std::size_t keep) {
  VerificationReport report("poweli", J.ring().field());
  verify_poweli_into(report, J, dvec, keep);
  return report;
}

// ---------------------------------------------------------------------------

#define REGCERT_INSTANTIATE_GROEBNER(K)                                                        \
  template std::string presentation_text(const IdealPresentation<K>&);                         \
  template class IdealPresentation<K>;                                                         \
  template Division<K> normal_form(const Polynomial<K>&, std::span<const Polynomial<K>>);      \
  template Polynomial<K> reduce(const Polynomial<K>&, std::span<const Polynomial<K>>);         \
  template std::optional<std::pair<std::size_t, std::size_t>> buchberger_criterion_witness(   \
      std::span<const Polynomial<K>>);                                                         \
  template GroebnerBasis<K> buchberger(const IdealPresentation<K>&, const TermOrder&,          \
                                       const BuchbergerOptions&);                              \
  template GroebnerBasis<K> reduce_basis(const GroebnerBasis<K>&);                             \
  template GroebnerBasis<K> groebner_basis(const IdealPresentation<K>&, const TermOrder&);     \
  template MonomialIdeal initial_ideal(const GroebnerBasis<K>&);                               \
  template GroebnerBasis<K> eliminate(const GroebnerBasis<K>&, std::size_t);                   \
  template IdealPresentation<K> graph_ideal(std::span<const Polynomial<K>>);                   \
  template GroebnerBasis<K> kernel_of_map(std::span<const Polynomial<K>>,                      \
                                          const KernelOptions&);                               \
  template IdealPresentation<K> image_ideal(const PowerMap&, const IdealPresentation<K>&);     \
  template bool ideal_equal(const IdealPresentation<K>&, const IdealPresentation<K>&,          \
                            const TermOrder&);                                                 \
  template void verify_poweli_into(VerificationReport&, const IdealPresentation<K>&,           \
                                   const PowerMap&, std::size_t);                              \
  template VerificationReport verify_poweli(const IdealPresentation<K>&, const PowerMap&,      \
                                            std::size_t);

REGCERT_INSTANTIATE_GROEBNER(Zp)
REGCERT_INSTANTIATE_GROEBNER(Rational)

}  // namespace regcert
