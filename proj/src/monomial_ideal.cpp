#include "regcert/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "regcert/polynomial.hpp"

namespace regcert {

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) {
  return compare(TermOrder::lex(), a, b) == std::strong_ordering::greater;
}

void enumerate_degree(std::size_t nvars, std::uint32_t t, std::size_t var, Monomial& cur,
                      std::vector<Monomial>& out) {
  if (var == 0) {
    cur.set(0, t);
    out.push_back(cur);
    return;
  }
  // Largest variable first so the output is descending in lex.
  for (std::uint32_t e = t + 1; e-- > 0;) {
    cur.set(var, e);
    enumerate_degree(nvars, t - e, var - 1, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators)
    : nvars_(nvars) {
  for (const auto& g : generators) {
    if (g.size() != nvars) throw std::invalid_argument("generator from a different ring");
  }
  // Ascending degree so that divisors are kept before their multiples.
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_greater(a, b);
  });
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& h : gens_) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end(), lex_greater);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::uint32_t MonomialIdeal::max_generator_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

Monomial MonomialIdeal::lcm_of_generators() const {
  Monomial l(nvars_);
  for (const auto& g : gens_) l = lcm(l, g);
  return l;
}

MonomialIdeal MonomialIdeal::intersect_subring(std::size_t keep) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) {
    if (g.lies_in_first(keep)) out.push_back(g.project(keep));
  }
  return MonomialIdeal(keep, std::move(out));
}

MonomialIdeal MonomialIdeal::colon_variable(std::size_t k) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (auto g : gens_) {
    if (g[k] > 0) g.set(k, g[k] - 1);
    out.push_back(g);
  }
  return MonomialIdeal(nvars_, std::move(out));
}

MonomialIdeal MonomialIdeal::plus_variable(std::size_t k) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) {
    if (g[k] == 0) out.push_back(g);
  }
  out.push_back(Monomial::variable(nvars_, k));
  return MonomialIdeal(nvars_, std::move(out));
}

MonomialIdeal MonomialIdeal::image(const PowerMap& phi) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) out.push_back(phi.apply(g));
  return MonomialIdeal(nvars_, std::move(out));
}

std::string MonomialIdeal::to_string(std::span<const std::string> names) const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string(names);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

StandardMonomials::StandardMonomials(const MonomialIdeal& ideal, std::optional<Monomial> bound)
    : nvars_(ideal.nvars()), unit_(ideal.is_unit()), bound_(std::move(bound)) {
  if (bound_ && bound_->size() != nvars_) throw std::invalid_argument("bound from another ring");
  for (const auto& g : ideal.generators()) generators_.insert(g);
}

void StandardMonomials::extend_to(std::uint32_t t) {
  while (lists_.size() <= t) {
    const std::uint32_t deg = static_cast<std::uint32_t>(lists_.size());
    std::vector<Monomial> next;
    if (deg == 0) {
      if (!unit_) next.push_back(Monomial(nvars_));
    } else {
      const auto& prev = index_[deg - 1];
      for (const auto& u : lists_[deg - 1]) {
        const int top = std::max(u.max_variable(), 0);
        for (std::size_t k = static_cast<std::size_t>(top); k < nvars_; ++k) {
          if (bound_ && u[k] >= (*bound_)[k]) continue;
          Monomial w = u;
          w.set(k, u[k] + 1);
          bool ok = !generators_.contains(w);
          for (std::size_t j = 0; ok && j < k; ++j) {
            if (w[j] == 0) continue;
            Monomial parent = w;
            parent.set(j, w[j] - 1);
            ok = prev.contains(parent);
          }
          if (ok) next.push_back(w);
        }
      }
      std::sort(next.begin(), next.end(), lex_greater);
    }
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> idx;
    idx.reserve(next.size());
    for (std::uint32_t i = 0; i < next.size(); ++i) idx.emplace(next[i], i);
    lists_.push_back(std::move(next));
    index_.push_back(std::move(idx));
  }
}

const std::vector<Monomial>& StandardMonomials::degree(std::uint32_t t) {
  if (t < released_below_) throw std::logic_error("standard monomial table already released");
  extend_to(t);
  return lists_[t];
}

std::int64_t StandardMonomials::index_of(const Monomial& m) {
  const std::uint32_t t = m.degree();
  if (t < released_below_) throw std::logic_error("standard monomial table already released");
  extend_to(t);
  auto it = index_[t].find(m);
  return it == index_[t].end() ? -1 : static_cast<std::int64_t>(it->second);
}

bool StandardMonomials::is_standard(const Monomial& m) { return index_of(m) >= 0; }

void StandardMonomials::release_below(std::uint32_t t) {
  for (std::uint32_t d = released_below_; d < t && d < lists_.size(); ++d) {
    // Keep the previous degree alive: extend_to() reads it.
    if (d + 1 == lists_.size()) break;
    std::vector<Monomial>().swap(lists_[d]);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash>().swap(index_[d]);
    released_below_ = d + 1;
  }
}

std::vector<Monomial> standard_monomial_basis(const MonomialIdeal& M, std::uint32_t t) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(M.nvars(), t)) {
    if (!M.contains(m)) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t t) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  enumerate_degree(nvars, t, nvars - 1, cur, out);
  return out;
}

}  // namespace regcert
