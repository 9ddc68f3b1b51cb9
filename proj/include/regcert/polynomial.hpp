#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regcert/monomial.hpp"
#include "regcert/scalar.hpp"

namespace regcert {

template <class K>
struct Term {
  K coeff;
  Monomial mono;
};

/// Substitution x_i -> x_i^{d_i}.
class PowerMap {
 public:
  explicit PowerMap(std::vector<unsigned> degrees);
  /// d on the first `count` variables, 1 on the remaining ones.
  static PowerMap uniform(std::size_t nvars, unsigned d, std::size_t count);
  static PowerMap uniform(std::size_t nvars, unsigned d) { return uniform(nvars, d, nvars); }

  std::size_t size() const { return degrees_.size(); }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  bool is_identity() const;
  PowerMap restricted(std::size_t keep) const;

  Monomial apply(const Monomial& m) const;

 private:
  std::vector<unsigned> degrees_;
};

template <class K>
class Polynomial {
 public:
  using TermType = Term<K>;

  Polynomial(std::size_t nvars, TermOrder order, FieldSpec field)
      : nvars_(nvars), order_(order), field_(field) {}

  /// Merges equal monomials, drops zero coefficients and sorts descending.
  static Polynomial normalize(std::vector<TermType> terms, std::size_t nvars, TermOrder order,
                              FieldSpec field);
  static Polynomial constant(const K& c, std::size_t nvars, TermOrder order, FieldSpec field);
  static Polynomial monomial(const K& c, const Monomial& m, TermOrder order, FieldSpec field);

  std::size_t nvars() const { return nvars_; }
  const TermOrder& order() const { return order_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<TermType>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }

  const TermType& leading_term() const { return checked_front(); }
  const Monomial& leading_monomial() const { return checked_front().mono; }
  const K& leading_coefficient() const { return checked_front().coeff; }

  /// (true, degree) when all terms share one total degree; the zero
  /// polynomial is homogeneous of every degree and reports no degree.
  std::pair<bool, std::optional<std::uint32_t>> homogeneity() const;
  bool is_homogeneous() const { return homogeneity().first; }
  std::uint32_t total_degree() const;

  Polynomial monic() const;
  /// Copy without the leading term.
  Polynomial tail() const;
  /// Appends a term strictly smaller than every current term.
  void append_term(TermType term);
  Polynomial with_order(const TermOrder& order) const;
  Polynomial project(std::size_t keep) const;
  Polynomial embed(std::size_t nvars, std::size_t offset, const TermOrder& order) const;
  bool lies_in_first(std::size_t keep) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return add_scaled(K::one(field_), Monomial(nvars_), o); }
  Polynomial& operator-=(const Polynomial& o) { return add_scaled(-K::one(field_), Monomial(nvars_), o); }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.times(b); }

  /// this += c * m * other, merging in a single pass.
  Polynomial& add_scaled(const K& c, const Monomial& m, const Polynomial& other);
  Polynomial scaled(const K& c, const Monomial& m) const;
  Polynomial times(const Polynomial& o) const;
  Polynomial pow(unsigned e) const;

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    }
    return true;
  }

 private:
  const TermType& checked_front() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
  }
  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials from different rings");
    if (!(o.order_ == order_)) throw std::invalid_argument("polynomials under different orders");
  }

  std::vector<TermType> terms_;
  std::size_t nvars_;
  TermOrder order_;
  FieldSpec field_;
};

template <class K>
Polynomial<K> poly_normalize(std::vector<Term<K>> terms, std::size_t nvars, const TermOrder& order,
                             const FieldSpec& field) {
  return Polynomial<K>::normalize(std::move(terms), nvars, order, field);
}

/// S(f, h) = (L/LT(f)) f - (L/LT(h)) h with L = lcm of the leading monomials.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& h);

template <class K>
Polynomial<K> apply_power_map(const PowerMap& phi, const Polynomial<K>& f);

/// g(images[0], ..., images[n-1]); all images share one ring.
template <class K>
Polynomial<K> compose(const Polynomial<K>& g, std::span<const Polynomial<K>> images);

// ---------------------------------------------------------------------------
// Implementation

template <class K>
Polynomial<K> Polynomial<K>::normalize(std::vector<TermType> terms, std::size_t nvars,
                                       TermOrder order, FieldSpec field) {
  for (const auto& t : terms) {
    if (t.mono.size() != nvars) throw std::invalid_argument("term from a different ring");
  }
  MonomialGreater greater{order};
  std::sort(terms.begin(), terms.end(),
            [&](const TermType& a, const TermType& b) { return greater(a.mono, b.mono); });
  Polynomial p(nvars, order, field);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::constant(const K& c, std::size_t nvars, TermOrder order,
                                      FieldSpec field) {
  Polynomial p(nvars, order, field);
  if (!c.is_zero()) p.terms_.push_back({c, Monomial(nvars)});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::monomial(const K& c, const Monomial& m, TermOrder order,
                                      FieldSpec field) {
  Polynomial p(m.size(), order, field);
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

template <class K>
std::pair<bool, std::optional<std::uint32_t>> Polynomial<K>::homogeneity() const {
  if (terms_.empty()) return {true, std::nullopt};
  const std::uint32_t d = terms_.front().mono.degree();
  for (const auto& t : terms_) {
    if (t.mono.degree() != d) return {false, std::nullopt};
  }
  return {true, d};
}

template <class K>
std::uint32_t Polynomial<K>::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

template <class K>
Polynomial<K> Polynomial<K>::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  const K inv = terms_.front().coeff.inverse();
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= inv;
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::tail() const {
  Polynomial p(nvars_, order_, field_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

template <class K>
void Polynomial<K>::append_term(TermType term) {
  if (term.coeff.is_zero()) return;
  if (!terms_.empty() &&
      compare(order_, terms_.back().mono, term.mono) != std::strong_ordering::greater) {
    throw std::logic_error("append_term would break the term order");
  }
  terms_.push_back(std::move(term));
}

template <class K>
Polynomial<K> Polynomial<K>::with_order(const TermOrder& order) const {
  if (order == order_) return *this;
  return normalize(terms_, nvars_, order, field_);
}

template <class K>
bool Polynomial<K>::lies_in_first(std::size_t keep) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const TermType& t) { return t.mono.lies_in_first(keep); });
}

template <class K>
Polynomial<K> Polynomial<K>::project(std::size_t keep) const {
  Polynomial p(keep, order_.restricted(nvars_, keep), field_);
  for (const auto& t : terms_) p.terms_.push_back({t.coeff, t.mono.project(keep)});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::embed(std::size_t nvars, std::size_t offset,
                                   const TermOrder& order) const {
  std::vector<TermType> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.coeff, t.mono.embed(nvars, offset)});
  return normalize(std::move(ts), nvars, order, field_);
}

template <class K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

template <class K>
Polynomial<K>& Polynomial<K>::add_scaled(const K& c, const Monomial& m, const Polynomial& other) {
  check_compatible(other);
  if (c.is_zero() || other.is_zero()) return *this;
  std::vector<TermType> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial bm = b->mono * m;
    if (a == terms_.end()) {
      out.push_back({c * b->coeff, bm});
      ++b;
      continue;
    }
    auto cmp = compare(order_, a->mono, bm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(std::move(*a++));
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({c * b->coeff, bm});
      ++b;
    } else {
      K s = a->coeff + c * b->coeff;
      if (!s.is_zero()) out.push_back({std::move(s), bm});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

template <class K>
Polynomial<K> Polynomial<K>::scaled(const K& c, const Monomial& m) const {
  Polynomial p(nvars_, order_, field_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coeff * c, t.mono * m});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::times(const Polynomial& o) const {
  check_compatible(o);
  Polynomial p(nvars_, order_, field_);
  for (const auto& t : o.terms_) p.add_scaled(t.coeff, t.mono, *this);
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::pow(unsigned e) const {
  Polynomial result = constant(K::one(field_), nvars_, order_, field_);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1u) result = result.times(base);
    e >>= 1;
    if (e != 0) base = base.times(base);
  }
  return result;
}

template <class K>
std::string Polynomial<K>::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = prints_negative(t.coeff);
    const K mag = neg ? -t.coeff : t.coeff;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += t.mono.to_string(names);
    }
  }
  return out;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& h) {
  if (f.is_zero() || h.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  const Monomial l = lcm(f.leading_monomial(), h.leading_monomial());
  Polynomial<K> s = f.scaled(f.leading_coefficient().inverse(), l / f.leading_monomial());
  s.add_scaled(-h.leading_coefficient().inverse(), l / h.leading_monomial(), h);
  return s;
}

template <class K>
Polynomial<K> apply_power_map(const PowerMap& phi, const Polynomial<K>& f) {
  if (phi.size() != f.nvars()) throw std::invalid_argument("power map from a different ring");
  std::vector<Term<K>> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) ts.push_back({t.coeff, phi.apply(t.mono)});
  // Distinct monomials stay distinct, so only re-sorting can be needed.
  return Polynomial<K>::normalize(std::move(ts), f.nvars(), f.order(), f.field());
}

template <class K>
Polynomial<K> compose(const Polynomial<K>& g, std::span<const Polynomial<K>> images) {
  if (images.size() != g.nvars()) throw std::invalid_argument("compose: wrong number of images");
  if (images.empty()) throw std::invalid_argument("compose: no images");
  const auto& ref = images.front();
  Polynomial<K> result(ref.nvars(), ref.order(), ref.field());
  // Cache powers per variable.
  std::vector<std::vector<Polynomial<K>>> powers(images.size());
  for (const auto& t : g.terms()) {
    Polynomial<K> prod = Polynomial<K>::constant(t.coeff, ref.nvars(), ref.order(), ref.field());
    for (std::size_t i = 0; i < images.size(); ++i) {
      const unsigned e = t.mono[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) {
        cache.push_back(Polynomial<K>::constant(K::one(ref.field()), ref.nvars(), ref.order(),
                                                ref.field()));
      }
      while (cache.size() <= e) cache.push_back(cache.back().times(images[i]));
      prod = prod.times(cache[e]);
    }
    result += prod;
  }
  return result;
}

}  // namespace regcert
