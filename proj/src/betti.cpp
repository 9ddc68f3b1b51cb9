#include "regcert/betti.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <gmpxx.h>

#include "regcert/graded.hpp"
#include "regcert/linalg.hpp"

namespace regcert {

// ---------------------------------------------------------------------------
// BettiTable

std::uint64_t BettiTable::entry(std::uint32_t i, std::uint32_t j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::add(std::uint32_t i, std::uint32_t j, std::uint64_t value) {
  if (value != 0) entries[{i, j}] += value;
}

std::optional<std::int64_t> BettiTable::reg() const {
  std::optional<std::int64_t> r;
  for (const auto& [ij, v] : entries) {
    const std::int64_t c = static_cast<std::int64_t>(ij.second) - ij.first;
    if (!r || c > *r) r = c;
  }
  return r;
}

std::optional<std::uint32_t> BettiTable::pdim() const {
  std::optional<std::uint32_t> p;
  for (const auto& [ij, v] : entries) p = std::max(p.value_or(0), ij.first);
  return p;
}

std::uint64_t BettiTable::quotient_entry(std::uint32_t i, std::uint32_t j) const {
  if (i == 0) return j == 0 && !entries.contains({0, 0}) ? 1 : 0;
  return entry(i - 1, j);
}

std::string BettiTable::to_string() const {
  if (entries.empty()) return "(zero ideal)\n";
  const std::uint32_t pd = *pdim();
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (const auto& [ij, v] : entries) {
    const std::int64_t r = static_cast<std::int64_t>(ij.second) - ij.first;
    lo = first ? r : std::min(lo, r);
    hi = first ? r : std::max(hi, r);
    first = false;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (std::uint32_t i = 0; i <= pd; ++i) header.push_back(std::to_string(i));
  cells.push_back(header);
  for (std::int64_t r = lo; r <= hi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (std::uint32_t i = 0; i <= pd; ++i) {
      const std::uint64_t v = entry(i, static_cast<std::uint32_t>(r + i));
      row.push_back(v == 0 ? "." : std::to_string(v));
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(pd + 2, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << std::string(width[c] - row[c].size(), ' ') << row[c] << (c + 1 < row.size() ? " " : "");
    }
    out << "\n";
  }
  if (!certified) out << "(certified through degree " << certified_through << " only)\n";
  return out.str();
}

json BettiTable::to_json() const {
  json e = json::array();
  for (const auto& [ij, v] : entries) e.push_back({ij.first, ij.second, v});
  return {{"entries", e}, {"certified", certified}, {"certified_through", certified_through}};
}

// ---------------------------------------------------------------------------
// Monomial ideals: fine-graded Koszul homology

namespace {

using Mask = std::uint32_t;

template <class K>
class FineKoszul {
 public:
  FineKoszul(const MonomialIdeal& M, const FieldSpec& field)
      : M_(M), n_(M.nvars()), field_(field), lcm_(M.lcm_of_generators()),
        standard_(M, lcm_), by_value_(n_), column_(std::size_t{1} << n_, -1) {
    const auto& gens = M_.generators();
    for (std::uint32_t g = 0; g < gens.size(); ++g) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (gens[g][k] > 0) by_value_[k][gens[g][k]].push_back(g);
      }
    }
  }

  const Monomial& lcm() const { return lcm_; }

  // Adds every beta_{i,t}(M) to `table`.
  void degree(std::uint32_t t, BettiTable& table) {
    std::unordered_set<Monomial, MonomialHash> seen;
    const std::uint32_t lowest = t > n_ ? t - static_cast<std::uint32_t>(n_) : 0;
    for (std::uint32_t s = lowest; s < t; ++s) {
      const std::uint32_t size = t - s;
      for (const auto& u : standard_.degree(s)) {
        Mask room = 0;
        for (std::size_t k = 0; k < n_; ++k) {
          if (u[k] < lcm_[k]) room |= Mask{1} << k;
        }
        if (static_cast<std::uint32_t>(std::popcount(room)) < size) continue;
        for (Mask F = room;; F = (F - 1) & room) {
          if (static_cast<std::uint32_t>(std::popcount(F)) == size) {
            Monomial a = u;
            for (std::size_t k = 0; k < n_; ++k) {
              if (F >> k & 1) a.set(k, a[k] + 1);
            }
            if (seen.insert(a).second && in_lattice(a)) homology(a, table);
          }
          if (F == 0) break;
        }
      }
    }
    standard_.release_below(lowest);
  }

 private:
  bool in_lattice(const Monomial& a) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (a[k] == 0) continue;
      auto it = by_value_[k].find(a[k]);
      if (it == by_value_[k].end()) return false;
      const auto& gens = M_.generators();
      if (std::none_of(it->second.begin(), it->second.end(),
                       [&](std::uint32_t g) { return gens[g].divides(a); })) {
        return false;
      }
    }
    return true;
  }

  void homology(const Monomial& a, BettiTable& table) {
    Mask support = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      if (a[k] > 0) support |= Mask{1} << k;
    }
    const int width = std::popcount(support);
    std::vector<std::vector<Mask>> faces(width + 1);
    for (Mask F = support;; F = (F - 1) & support) {
      Monomial b = a;
      for (std::size_t k = 0; k < n_; ++k) {
        if (F >> k & 1) b.set(k, b[k] - 1);
      }
      if (standard_.is_standard(b)) {
        const int q = std::popcount(F);
        column_[F] = static_cast<std::int32_t>(faces[q].size());
        faces[q].push_back(F);
      }
      if (F == 0) break;
    }
    std::vector<std::size_t> rank(width + 2, 0);
    const K one = K::one(field_);
    for (int q = 1; q <= width; ++q) {
      if (faces[q].empty() || faces[q - 1].empty()) continue;
      std::vector<SparseRow<K>> rows;
      for (Mask F : faces[q]) {
        std::vector<std::pair<std::uint32_t, K>> row;
        int below = 0;
        for (std::size_t k = 0; k < n_; ++k) {
          if (!(F >> k & 1)) continue;
          const std::int32_t col = column_[F & ~(Mask{1} << k)];
          if (col >= 0) row.emplace_back(static_cast<std::uint32_t>(col), below % 2 ? -one : one);
          ++below;
        }
        if (!row.empty()) rows.push_back(make_row(std::move(row)));
      }
      rank[q] = rows.empty() ? 0 : sparse_rank(std::move(rows));
    }
    for (int q = 1; q <= width; ++q) {
      const std::size_t h = faces[q].size() - rank[q] - rank[q + 1];
      table.add(static_cast<std::uint32_t>(q - 1), a.degree(), h);
    }
    for (const auto& level : faces) {
      for (Mask F : level) column_[F] = -1;
    }
  }

  const MonomialIdeal& M_;
  std::size_t n_;
  FieldSpec field_;
  Monomial lcm_;
  StandardMonomials standard_;
  std::vector<std::unordered_map<unsigned, std::vector<std::uint32_t>>> by_value_;
  std::vector<std::int32_t> column_;
};

template <class K>
BettiTable monomial_table(const MonomialIdeal& M, const FieldSpec& field,
                          std::optional<std::uint32_t> max_degree) {
  BettiTable table;
  table.nvars = M.nvars();
  if (M.is_zero()) return table;
  if (M.is_unit()) {
    table.add(0, 0, 1);
    return table;
  }
  if (M.nvars() > 20) throw std::invalid_argument("too many variables for the Koszul complex");
  FineKoszul<K> koszul(M, field);
  std::uint32_t through = koszul.lcm().degree();
  if (max_degree && *max_degree < through) {
    through = *max_degree;
    table.certified = false;
  }
  for (std::uint32_t t = 1; t <= through; ++t) koszul.degree(t, table);
  table.certified_through = through;
  return table;
}

// ---------------------------------------------------------------------------
// General homogeneous ideals

std::vector<std::vector<Mask>> masks_by_size(std::size_t n) {
  std::vector<std::vector<Mask>> out(n + 1);
  for (Mask F = 0; F < (Mask{1} << n); ++F) out[std::popcount(F)].push_back(F);
  return out;
}

template <class K>
class GradedKoszul {
 public:
  explicit GradedKoszul(const GroebnerBasis<K>& basis)
      : Q_(basis), n_(basis.ring.nvars()), masks_(masks_by_size(n_)),
        position_(std::size_t{1} << n_, 0) {
    for (const auto& level : masks_) {
      for (std::uint32_t p = 0; p < level.size(); ++p) position_[level[p]] = p;
    }
  }

  std::size_t chain_dim(std::uint32_t q, std::uint32_t j) {
    if (q > n_ || q > j) return 0;
    return masks_[q].size() * Q_.dim(std::int64_t(j) - q);
  }

  // rank of the differential C_q -> C_{q-1} in internal degree j.
  std::size_t rank(std::uint32_t q, std::uint32_t j) {
    if (q == 0 || q > n_ || q > j) return 0;
    auto key = std::make_pair(q, j);
    if (auto it = ranks_.find(key); it != ranks_.end()) return it->second;
    const std::uint32_t t = j - q;
    const std::size_t target = Q_.dim(t + 1);
    std::vector<SparseRow<K>> rows;
    const std::size_t h = Q_.dim(t);
    for (Mask F : masks_[q]) {
      for (std::size_t idx = 0; idx < h; ++idx) {
        std::vector<std::pair<std::uint32_t, K>> row;
        int below = 0;
        for (std::size_t k = 0; k < n_; ++k) {
          if (!(F >> k & 1)) continue;
          const std::uint32_t base =
              static_cast<std::uint32_t>(position_[F & ~(Mask{1} << k)] * target);
          for (const auto& [c, v] : Q_.multiply(k, t, idx)) {
            row.emplace_back(base + c, below % 2 ? -v : v);
          }
          ++below;
        }
        if (!row.empty()) rows.push_back(make_row(std::move(row)));
      }
    }
    const std::size_t r = sparse_rank(std::move(rows));
    ranks_.emplace(key, r);
    return r;
  }

  std::uint64_t homology(std::uint32_t q, std::uint32_t j) {
    return chain_dim(q, j) - rank(q, j) - rank(q + 1, j);
  }

 private:
  GradedQuotient<K> Q_;
  std::size_t n_;
  std::vector<std::vector<Mask>> masks_;
  std::vector<std::uint32_t> position_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> ranks_;
};

template <class K>
bool is_monomial_presentation(const IdealPresentation<K>& I) {
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [](const auto& g) { return g.size() == 1; });
}

template <class K>
MonomialIdeal as_monomial_ideal(const IdealPresentation<K>& I) {
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.leading_monomial());
  return MonomialIdeal(I.ring().nvars(), std::move(gens));
}

BettiTable dispatch_monomial(const MonomialIdeal& M, const FieldSpec& field,
                             std::optional<std::uint32_t> max_degree) {
  return field.is_rational() ? monomial_table<Rational>(M, field, max_degree)
                             : monomial_table<Zp>(M, field, max_degree);
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& M, const FieldSpec& field,
                       std::optional<std::uint32_t> max_degree) {
  return dispatch_monomial(M, field, max_degree);
}

template <class K>
BettiTable betti_table(const IdealPresentation<K>& I, const TermOrder& order,
                       std::optional<std::uint32_t> max_degree) {
  if (!I.is_homogeneous()) throw std::invalid_argument("Betti table needs a homogeneous ideal");
  const FieldSpec& field = I.ring().field();
  if (is_monomial_presentation(I)) return dispatch_monomial(as_monomial_ideal(I), field, max_degree);
  const GroebnerBasis<K> basis = groebner_basis(I, order);
  const MonomialIdeal initial = initial_ideal(basis);
  BettiTable table;
  table.nvars = I.ring().nvars();
  if (initial.is_unit()) {
    table.add(0, 0, 1);
    return table;
  }
  const BettiTable initial_table = dispatch_monomial(initial, field, max_degree);
  const std::uint32_t n = static_cast<std::uint32_t>(table.nvars);
  // without reg(in I) no row is known to vanish: take every homological
  // degree up to the cutoff
  const std::optional<std::int64_t> r =
      initial_table.certified ? initial_table.reg() : std::nullopt;
  std::uint32_t through = r ? static_cast<std::uint32_t>(*r) + n - 1 : *max_degree;
  if (max_degree && *max_degree < through) through = *max_degree;
  table.certified = initial_table.certified && through == static_cast<std::uint32_t>(*r) + n - 1;
  GradedKoszul<K> koszul(basis);
  for (std::uint32_t j = 1; j <= through; ++j) {
    const std::int64_t lowest = r ? std::max<std::int64_t>(1, std::int64_t(j) - *r + 1) : 1;
    for (std::uint32_t q = static_cast<std::uint32_t>(lowest); q <= std::min(n, j); ++q) {
      table.add(q - 1, j, koszul.homology(q, j));
    }
  }
  table.certified_through = through;
  return table;
}

std::uint64_t koszul_homology_rank(const MonomialIdeal& M, std::uint32_t i, std::uint32_t j,
                                   const FieldSpec& field) {
  if (i == 0) return j == 0 && !M.is_unit() ? 1 : 0;
  if (i > M.nvars()) return 0;
  return betti_table(M, field, j).entry(i - 1, j);
}

template <class K>
std::uint64_t koszul_homology_rank(const IdealPresentation<K>& I, std::uint32_t i, std::uint32_t j,
                                   const TermOrder& order) {
  if (!I.is_homogeneous()) throw std::invalid_argument("Koszul homology needs a homogeneous ideal");
  if (I.is_zero()) {
    return i == 0 && j == 0 ? 1 : 0;
  }
  GradedKoszul<K> koszul(groebner_basis(I, order));
  return koszul.homology(i, j);
}

std::int64_t regularity(const BettiTable& table) {
  if (table.entries.empty()) throw std::invalid_argument("regularity of the zero ideal");
  if (table.entry(0, 0) != 0) throw std::invalid_argument("regularity of the unit ideal");
  if (!table.certified) {
    throw InconclusiveError("Betti table certified only through degree " +
                            std::to_string(table.certified_through));
  }
  return *table.reg();
}

std::int64_t regularity(const MonomialIdeal& M, const FieldSpec& field) {
  return regularity(betti_table(M, field));
}

template <class K>
std::int64_t regularity(const IdealPresentation<K>& I, const TermOrder& order) {
  return regularity(betti_table(I, order));
}

TInvariants t_invariants(const BettiTable& table) {
  if (table.entries.empty()) throw std::invalid_argument("t invariants of the zero ideal");
  if (!table.certified) throw InconclusiveError("t invariants of an uncertified Betti table");
  TInvariants out;
  out.t.assign(*table.pdim() + 1, 0);
  for (const auto& [ij, v] : table.entries) out.t[ij.first] = std::max(out.t[ij.first], ij.second);
  const std::int64_t r = *table.reg();
  for (std::uint32_t i = 0; i < out.t.size(); ++i) {
    if (static_cast<std::int64_t>(out.t[i]) - i == r) out.p = i;
  }
  return out;
}

std::optional<std::uint32_t> euler_characteristic_mismatch(const BettiTable& table,
                                                           const SeriesNumerator& numerator) {
  std::uint32_t top = table.certified_through;
  if (table.certified) top = std::max<std::uint32_t>(top, static_cast<std::uint32_t>(numerator.size()));
  for (const auto& [ij, v] : table.entries) top = std::max(top, ij.second);
  for (std::uint32_t j = 0; j <= top; ++j) {
    std::int64_t alt = 0;
    for (std::uint32_t q = 0; q <= table.nvars; ++q) {
      const std::int64_t b = static_cast<std::int64_t>(table.quotient_entry(q, j));
      alt += q % 2 ? -b : b;
    }
    const std::int64_t expected = j < numerator.size() ? numerator[j] : 0;
    if (alt != expected) return j;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Flat power maps

namespace {

std::string fraction(std::int64_t num, std::int64_t den) {
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q.get_str();
}

}  // namespace

void compare_flat_tables(InstanceResult& inst, const BettiTable& base, const BettiTable& image,
                         unsigned d) {
  if (!base.certified || !image.certified) {
    // entries past the cutoff are unknown, so no comparison can pass
    inst.mark_inconclusive(std::string(base.certified ? "I'" : "I") + " has an uncertified Betti table");
    return;
  }
  for (const auto& [ij, v] : image.entries) {
    const auto [i, j] = ij;
    if (j % d != 0) {
      inst.check(false, "beta_{" + std::to_string(i) + "," + std::to_string(j) +
                            "}(I') = " + std::to_string(v) + " but d does not divide j");
    } else {
      inst.check(base.entry(i, j / d) == v,
                 "beta_{" + std::to_string(i) + "," + std::to_string(j) + "}(I') = " +
                     std::to_string(v) + " != beta_{" + std::to_string(i) + "," +
                     std::to_string(j / d) + "}(I) = " + std::to_string(base.entry(i, j / d)));
    }
  }
  for (const auto& [ij, v] : base.entries) {
    const auto [i, j] = ij;
    inst.check(image.entry(i, j * d) == v,
               "beta_{" + std::to_string(i) + "," + std::to_string(j * d) + "}(I') = " +
                   std::to_string(image.entry(i, j * d)) + " != beta_{" + std::to_string(i) + "," +
                   std::to_string(j) + "}(I) = " + std::to_string(v));
  }
  const bool proper = !base.entries.empty() && base.entry(0, 0) == 0 && !image.entries.empty() &&
                      image.entry(0, 0) == 0;
  if (!proper) {
    inst.values["note"] = base.entries.empty() ? "zero ideal" : "unit ideal";
    return;
  }
  const TInvariants tb = t_invariants(base);
  const TInvariants ti = t_invariants(image);
  std::vector<std::uint32_t> scaled;
  for (auto t : tb.t) scaled.push_back(t * d);
  inst.values["t_I"] = tb.t;
  inst.values["t_I_prime"] = ti.t;
  inst.check(ti.t == scaled, "t_i(I') != d t_i(I)");
  const std::int64_t r = *base.reg();
  const std::int64_t rp = *image.reg();
  const std::int64_t p = tb.p;
  const std::int64_t dd = d;
  inst.values["reg_I"] = r;
  inst.values["reg_I_prime"] = rp;
  inst.values["p"] = p;
  inst.values["reg_I_prime_over_d"] = fraction(rp, dd);
  inst.values["gap"] = fraction(rp - dd * r, dd);
  inst.bound["flat_rhs"] = fraction(dd * r + p * (dd - 1), dd);
  inst.bound["scaled_rhs"] = r;
  const std::int64_t slack = rp - dd * r - p * (dd - 1);
  inst.values["flat_slack_times_d"] = slack;
  inst.values["flat_bound"] = slack == 0 ? "equality" : (slack > 0 ? "strict" : "violated");
  inst.check(slack >= 0, "reg(I')/d = " + fraction(rp, dd) + " < reg(I) + p(d-1)/d = " +
                             fraction(dd * r + p * (dd - 1), dd));
  inst.check(dd * r <= rp, "reg(I) = " + std::to_string(r) + " > reg(I')/d = " + fraction(rp, dd));
}

template <class K>
void check_flat_betti_into(VerificationReport& report, const IdealPresentation<K>& I, unsigned d,
                           const TermOrder& order) {
  if (d == 0) throw std::invalid_argument("power map degree must be positive");
  InstanceResult inst;
  const std::string text = presentation_text(I) + " d=" + std::to_string(d);
  inst.digest = digest_of(text);
  inst.values["ideal"] = text;
  inst.values["d"] = d;
  if (!I.is_homogeneous()) {
    inst.check(false, "ideal is not homogeneous");
    report.add(std::move(inst));
    return;
  }
  const IdealPresentation<K> image = image_ideal(PowerMap::uniform(I.ring().nvars(), d), I);
  const BettiTable base = betti_table(I, order);
  const BettiTable flat = betti_table(image, order);
  if (!base.certified || !flat.certified) {
    inst.mark_inconclusive("Betti table not certified");
  } else {
    compare_flat_tables(inst, base, flat, d);
  }
  inst.values["betti_I"] = base.to_json();
  inst.values["betti_I_prime"] = flat.to_json();
  report.add(std::move(inst));
}

template <class K>
VerificationReport check_flat_betti(const IdealPresentation<K>& I, unsigned d,
                                    const TermOrder& order) {
  VerificationReport report("regflat", I.ring().field());
  check_flat_betti_into(report, I, d, order);
  return report;
}

#define REGCERT_INSTANTIATE_BETTI(K)                                                          \
  template BettiTable betti_table(const IdealPresentation<K>&, const TermOrder&,              \
                                  std::optional<std::uint32_t>);                              \
  template std::uint64_t koszul_homology_rank(const IdealPresentation<K>&, std::uint32_t,     \
                                              std::uint32_t, const TermOrder&);               \
  template std::int64_t regularity(const IdealPresentation<K>&, const TermOrder&);            \
  template VerificationReport check_flat_betti(const IdealPresentation<K>&, unsigned,         \
                                               const TermOrder&);                             \
  template void check_flat_betti_into(VerificationReport&, const IdealPresentation<K>&,       \
                                      unsigned, const TermOrder&);

REGCERT_INSTANTIATE_BETTI(Zp)
REGCERT_INSTANTIATE_BETTI(Rational)

}  // namespace regcert
