#include "regcert/lex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace regcert {

std::int64_t lex_rank(const Monomial& m) {
  std::int64_t rank = 0;
  std::int64_t remaining = m.degree();
  for (std::size_t i = m.size(); i-- > 1;) {
    // Monomials agreeing above x_{i+1} with a larger exponent there.
    rank += monomial_count(i + 1, remaining - m[i] - 1);
    remaining -= m[i];
  }
  return rank;
}

Monomial lex_unrank(std::size_t nvars, std::uint32_t t, std::int64_t rank) {
  if (rank < 0 || rank >= monomial_count(nvars, t)) throw std::out_of_range("lex rank out of range");
  Monomial m(nvars);
  std::int64_t remaining = t;
  for (std::size_t i = nvars; i-- > 1;) {
    for (std::int64_t e = remaining; e >= 0; --e) {
      const std::int64_t block = monomial_count(i, remaining - e);
      if (rank < block) {
        m.set(i, static_cast<unsigned>(e));
        remaining -= e;
        break;
      }
      rank -= block;
    }
  }
  m.set(0, static_cast<unsigned>(remaining));
  return m;
}

namespace {

// Size of S_1 * L where L is the lex segment of `size` monomials in degree t.
std::int64_t closure_size(std::size_t nvars, std::uint32_t t, std::int64_t size) {
  if (size == 0) return 0;
  Monomial last = lex_unrank(nvars, t, size - 1);
  last.set(0, last[0] + 1);
  return lex_rank(last) + 1;
}

void validate_dims(const HilbertData& ideal_side) {
  for (std::size_t t = 0; t < ideal_side.dims.size(); ++t) {
    const std::int64_t full = monomial_count(ideal_side.nvars, static_cast<std::int64_t>(t));
    if (ideal_side.dims[t] < 0 || ideal_side.dims[t] > full) {
      throw std::domain_error("dimension " + std::to_string(ideal_side.dims[t]) + " in degree " +
                              std::to_string(t) + " is outside [0, " + std::to_string(full) + "]");
    }
  }
}

}  // namespace

LexResult lex_segment_ideal(const HilbertData& h,
                            std::optional<std::uint32_t> generator_degree_bound) {
  const HilbertData a = h.to_ideal_side();
  if (a.nvars == 0 || a.dims.empty()) throw std::invalid_argument("empty Hilbert data");
  validate_dims(a);
  const std::size_t n = a.nvars;
  const std::uint32_t D = a.cutoff();

  if (a.dims[0] > 0) {
    for (std::uint32_t t = 1; t <= D; ++t) {
      if (a.dims[t] != monomial_count(n, t)) {
        throw std::domain_error("unit ideal must fill degree " + std::to_string(t));
      }
    }
    return {MonomialIdeal(n, {Monomial(n)}), true, D};
  }

  std::vector<Monomial> gens;
  std::uint32_t last_generator_degree = 0;
  for (std::uint32_t t = 1; t <= D; ++t) {
    const std::int64_t closure = closure_size(n, t - 1, a.dims[t - 1]);
    if (a.dims[t] < closure) {
      throw std::domain_error("not a Hilbert function: degree " + std::to_string(t) +
                              " segment has " + std::to_string(a.dims[t]) +
                              " monomials but must contain " + std::to_string(closure));
    }
    for (std::int64_t r = closure; r < a.dims[t]; ++r) gens.push_back(lex_unrank(n, t, r));
    if (a.dims[t] > closure) last_generator_degree = t;
    if (generator_degree_bound && t - 1 >= *generator_degree_bound && a.dims[t] == closure) {
      return {MonomialIdeal(n, std::move(gens)), true, t};
    }
  }
  const bool quiet_top = D < 2 || last_generator_degree + 1 < D;
  const bool complete = !generator_degree_bound && quiet_top;
  return {MonomialIdeal(n, std::move(gens)), complete, D};
}

VerificationReport segment_closure_check(const HilbertData& h) {
  VerificationReport report("segment_closure", FieldSpec::rationals());
  const HilbertData a = h.to_ideal_side();
  InstanceResult inst;
  std::string text = std::to_string(a.nvars) + ":";
  for (auto v : a.dims) text += " " + std::to_string(v);
  inst.digest = digest_of(text);
  inst.values["nvars"] = a.nvars;
  inst.values["cutoff"] = a.cutoff();
  try {
    validate_dims(a);
    for (std::uint32_t t = 1; t <= a.cutoff(); ++t) {
      const std::int64_t closure = closure_size(a.nvars, t - 1, a.dims[t - 1]);
      if (!inst.check(a.dims[t] >= closure,
                      "segment closure fails at degree " + std::to_string(t) + ": need " +
                          std::to_string(closure) + ", have " + std::to_string(a.dims[t]))) {
        inst.values["failed_degree"] = t;
        break;
      }
    }
  } catch (const std::domain_error& e) {
    inst.check(false, e.what());
  }
  report.add(std::move(inst));
  return report;
}

bool is_strongly_stable(const MonomialIdeal& M) {
  for (const auto& u : M.generators()) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (u[j] == 0) continue;
      for (std::size_t i = j + 1; i < u.size(); ++i) {
        Monomial w = u;
        w.set(j, u[j] - 1);
        w.set(i, u[i] + 1);
        if (!M.contains(w)) return false;
      }
    }
  }
  return true;
}

std::uint32_t stable_regularity(const MonomialIdeal& M) {
  if (M.is_zero() || M.is_unit()) {
    throw std::invalid_argument("regularity is undefined for the zero and unit ideals");
  }
  if (!is_strongly_stable(M)) throw std::invalid_argument("ideal is not strongly stable");
  return M.max_generator_degree();
}

std::optional<std::uint64_t> g_bound(unsigned n, unsigned d, unsigned m) {
  if (m == 0) return std::nullopt;
  if (m - 1 >= 63) throw std::overflow_error("bound exponent overflow");
  std::uint64_t exponent = static_cast<std::uint64_t>(n) << (m - 1);
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(d), &r)) {
      throw std::overflow_error("bound overflow");
    }
    if (d <= 1) break;
  }
  return r;
}

LexResult lex_of_complete_intersection(unsigned n, unsigned d, unsigned m) {
  if (n == 0 || d == 0) throw std::invalid_argument("compute_G needs n, d >= 1");
  // Artinian case (m = 0): everything above the socle degree n(d-1) is in J.
  std::uint64_t cap = static_cast<std::uint64_t>(n) * (d - 1) + 1;
  if (auto b = g_bound(n, d, m)) cap = std::max<std::uint64_t>(cap, *b);
  cap = std::max<std::uint64_t>(cap, d) + 1;
  if (cap > 10'000'000) throw std::overflow_error("G cutoff beyond desk scale");
  const HilbertData h = ci_hilbert_function(n, d, m, static_cast<std::uint32_t>(cap));
  LexResult r = lex_segment_ideal(h, d);
  if (!r.complete) {
    throw std::logic_error("lex segment incomplete at the guaranteed cutoff " +
                           std::to_string(cap));
  }
  return r;
}

std::uint32_t compute_G(unsigned n, unsigned d, unsigned m) {
  return stable_regularity(lex_of_complete_intersection(n, d, m).ideal);
}

}  // namespace regcert
