#include "regcert/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace regcert {

namespace {

Monomial::Exponent checked_exponent(std::uint64_t v) {
  if (v > std::numeric_limits<Monomial::Exponent>::max()) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return static_cast<Monomial::Exponent>(v);
}

void check_size(std::size_t n) {
  if (n > Monomial::kMaxVars) {
    throw std::invalid_argument("at most " + std::to_string(Monomial::kMaxVars) +
                                " variables are supported");
  }
}

void check_same_ring(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("monomials from rings of different dimension (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                ")");
  }
}

std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_size(nvars);
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exps_[i] = checked_exponent(exponents[i]);
    degree_ += exps_[i];
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned value) {
  if (i >= nvars_) throw std::out_of_range("variable index out of range");
  degree_ = degree_ - exps_[i] + value;
  exps_[i] = checked_exponent(value);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

int Monomial::max_variable() const {
  for (std::size_t i = nvars_; i-- > 0;) {
    if (exps_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

bool Monomial::lies_in_first(std::size_t keep) const {
  for (std::size_t i = keep; i < nvars_; ++i) {
    if (exps_[i] != 0) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  check_same_ring(*this, o);
  for (std::size_t i = 0; i < nvars_; ++i) {
    exps_[i] = checked_exponent(std::uint64_t{exps_[i]} + o.exps_[i]);
  }
  degree_ += o.degree_;
  return *this;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  if (!b.divides(a)) throw std::domain_error("monomial quotient is not exact");
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] -= b.exps_[i];
  r.degree_ -= b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::project(std::size_t keep) const {
  if (!lies_in_first(keep)) throw std::domain_error("monomial does not lie in the subring");
  Monomial r(keep);
  for (std::size_t i = 0; i < keep; ++i) r.exps_[i] = exps_[i];
  r.degree_ = degree_;
  return r;
}

Monomial Monomial::embed(std::size_t nvars, std::size_t offset) const {
  if (offset + nvars_ > nvars) throw std::invalid_argument("embedding does not fit");
  Monomial r(nvars);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[offset + i] = exps_[i];
  r.degree_ = degree_;
  return r;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (degree_ == 0) return "1";
  std::string out;
  // Largest variable first, matching the term order precedence.
  for (std::size_t i = nvars_; i-- > 0;) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------------------

bool TermOrder::eliminates(std::size_t nvars, std::size_t keep) const {
  if (keep > nvars) return false;
  if (keep == nvars) return true;
  switch (kind_) {
    case Kind::lex:
      return true;
    case Kind::block:
      return eliminated_ == nvars - keep;
    case Kind::degrevlex:
      return false;
  }
  return false;
}

TermOrder TermOrder::restricted(std::size_t nvars, std::size_t keep) const {
  if (!eliminates(nvars, keep)) {
    throw std::invalid_argument(to_string() + " is not an elimination order for keeping " +
                                std::to_string(keep) + " of " + std::to_string(nvars) +
                                " variables");
  }
  switch (kind_) {
    case Kind::lex:
      return lex();
    case Kind::block:
      return keep == nvars ? *this : degrevlex();
    case Kind::degrevlex:
      return degrevlex();
  }
  return *this;
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::degrevlex:
      return "degrevlex";
    case Kind::block:
      return "elim " + std::to_string(eliminated_);
  }
  return "?";
}

std::strong_ordering compare(const TermOrder& order, const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  const std::size_t n = a.size();
  switch (order.kind()) {
    case TermOrder::Kind::lex:
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case TermOrder::Kind::degrevlex:
      return degrevlex_range(a, b, 0, n);
    case TermOrder::Kind::block: {
      const std::size_t split = n - std::min(order.eliminated(), n);
      auto c = degrevlex_range(a, b, split, n);
      if (c != std::strong_ordering::equal) return c;
      return degrevlex_range(a, b, 0, split);
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

PolyRing::PolyRing(std::vector<std::string> names, FieldSpec field, std::size_t kept)
    : names_(std::move(names)), field_(field), kept_(kept) {
  if (names_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  check_size(names_.size());
  if (kept_ > names_.size()) throw std::invalid_argument("kept variable count exceeds ring size");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
    }
  }
}

PolyRing PolyRing::standard(std::size_t nvars, FieldSpec field, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(prefix + std::to_string(i + 1));
  return PolyRing(std::move(names), field);
}

int PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

PolyRing PolyRing::subring(std::size_t keep) const {
  if (keep == 0 || keep > nvars()) throw std::invalid_argument("invalid subring size");
  return PolyRing(std::vector<std::string>(names_.begin(), names_.begin() + keep), field_, keep);
}

// ---------------------------------------------------------------------------

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("binomial coefficient overflow");
    }
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t monomial_count(std::size_t nvars, std::int64_t t) {
  if (t < 0) return 0;
  if (nvars == 0) return t == 0 ? 1 : 0;
  return binomial(t + static_cast<std::int64_t>(nvars) - 1, static_cast<std::int64_t>(nvars) - 1);
}

}  // namespace regcert
