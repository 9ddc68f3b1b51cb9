#include "regcert/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace regcert {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Hilbert series overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Hilbert series overflow");
  return r;
}

void add_into(SeriesNumerator& acc, const SeriesNumerator& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] = checked_add(acc[i + shift], p[i]);
}

SeriesNumerator multiply(const SeriesNumerator& a, const SeriesNumerator& b) {
  SeriesNumerator r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
    }
  }
  return r;
}

SeriesNumerator one_minus_t_pow(std::uint32_t d) {
  SeriesNumerator p(d + 1, 0);
  p[0] += 1;
  p[d] -= 1;
  return p;
}

void trim(SeriesNumerator& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

struct GensHash {
  std::size_t operator()(const std::vector<Monomial>& gens) const {
    std::size_t h = gens.size();
    for (const auto& g : gens) h = h * 1000003u ^ g.hash();
    return h;
  }
};

class NumeratorSolver {
 public:
  SeriesNumerator solve(const MonomialIdeal& M) {
    if (M.is_zero()) return {1};
    if (M.is_unit()) return {0};
    auto it = memo_.find(M.generators());
    if (it != memo_.end()) return it->second;

    const auto& gens = M.generators();
    const std::size_t n = M.nvars();
    std::vector<std::size_t> occurrences(n, 0);
    bool pairwise_coprime = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (gens[i][k] > 0) {
          if (occurrences[k] > 0) pairwise_coprime = false;
          ++occurrences[k];
        }
      }
    }

    SeriesNumerator result;
    if (pairwise_coprime) {
      result = {1};
      for (const auto& g : gens) result = multiply(result, one_minus_t_pow(g.degree()));
    } else {
      const std::size_t pivot = static_cast<std::size_t>(
          std::max_element(occurrences.begin(), occurrences.end()) - occurrences.begin());
      result = solve(M.plus_variable(pivot));
      add_into(result, solve(M.colon_variable(pivot)), 1);
    }
    trim(result);
    memo_.emplace(gens, result);
    return result;
  }

 private:
  std::unordered_map<std::vector<Monomial>, SeriesNumerator, GensHash> memo_;
};

}  // namespace

HilbertData HilbertData::to_ideal_side() const {
  if (side == Side::ideal) return *this;
  HilbertData out{dims, Side::ideal, nvars};
  for (std::size_t t = 0; t < dims.size(); ++t) {
    out.dims[t] = monomial_count(nvars, static_cast<std::int64_t>(t)) - dims[t];
  }
  return out;
}

HilbertData HilbertData::to_quotient_side() const {
  if (side == Side::quotient) return *this;
  HilbertData out{dims, Side::quotient, nvars};
  for (std::size_t t = 0; t < dims.size(); ++t) {
    out.dims[t] = monomial_count(nvars, static_cast<std::int64_t>(t)) - dims[t];
  }
  return out;
}

SeriesNumerator hilbert_numerator(const MonomialIdeal& M) {
  NumeratorSolver solver;
  return solver.solve(M);
}

HilbertData series_to_hilbert(const SeriesNumerator& numerator, std::size_t nvars,
                              std::uint32_t D) {
  HilbertData h{std::vector<std::int64_t>(D + 1, 0), HilbertData::Side::quotient, nvars};
  for (std::uint32_t t = 0; t <= D; ++t) {
    std::int64_t v = 0;
    for (std::size_t s = 0; s < numerator.size() && s <= t; ++s) {
      if (numerator[s] == 0) continue;
      v = checked_add(v, checked_mul(numerator[s],
                                     monomial_count(nvars, static_cast<std::int64_t>(t - s))));
    }
    h.dims[t] = v;
  }
  return h;
}

HilbertData hilbert_function(const MonomialIdeal& M, std::uint32_t D) {
  return series_to_hilbert(hilbert_numerator(M), M.nvars(), D);
}

HilbertData ci_hilbert_function(unsigned n, unsigned d, unsigned m, std::uint32_t D) {
  if (n == 0 || d == 0) throw std::invalid_argument("complete intersection needs n, d >= 1");
  SeriesNumerator num{1};
  for (unsigned i = 0; i < n; ++i) num = multiply(num, one_minus_t_pow(d));
  return series_to_hilbert(num, n + m, D);
}

// ---------------------------------------------------------------------------

namespace {

// C(k, t) compared against h without overflowing.
bool binomial_le(std::int64_t k, std::int64_t t, std::int64_t h) {
  try {
    return binomial(k, t) <= h;
  } catch (const std::overflow_error&) {
    return false;
  }
}

}  // namespace

std::vector<BinomialTerm> macaulay_representation(std::int64_t h, std::int64_t t) {
  if (h < 0 || t < 1) throw std::invalid_argument("Macaulay representation needs h >= 0, t >= 1");
  std::vector<BinomialTerm> rep;
  while (h > 0 && t > 0) {
    // Largest k with C(k, t) <= h.
    std::int64_t lo = t, hi = t;
    while (binomial_le(hi, t, h)) hi = hi * 2 + 1;
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (binomial_le(mid, t, h)) lo = mid; else hi = mid;
    }
    rep.push_back({lo, t});
    h -= binomial(lo, t);
    --t;
  }
  return rep;
}

std::int64_t macaulay_growth(std::int64_t h, std::int64_t t) {
  std::int64_t g = 0;
  for (const auto& term : macaulay_representation(h, t)) {
    g = checked_add(g, binomial(term.top + 1, term.bottom + 1));
  }
  return g;
}

}  // namespace regcert
