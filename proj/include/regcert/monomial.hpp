#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "regcert/scalar.hpp"

namespace regcert {

/// Dense exponent vector. Variable index 0 is x_1, the smallest variable
/// under the ring-wide precedence x_l > ... > x_1.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t size() const { return nvars_; }
  std::uint32_t degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned value);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  /// Largest variable index with a nonzero exponent; -1 for the unit monomial.
  int max_variable() const;
  /// True iff no variable with index >= keep occurs.
  bool lies_in_first(std::size_t keep) const;

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  /// Restriction to the first `keep` variables; requires lies_in_first(keep).
  Monomial project(std::size_t keep) const;
  /// Embed into a larger ring, placing this monomial's variables at `offset`.
  Monomial embed(std::size_t nvars, std::size_t offset) const;

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Term orders. Lex and the elimination block order both respect the
/// precedence x_l > ... > x_1.
class TermOrder {
 public:
  enum class Kind { lex, degrevlex, block };

  static TermOrder lex() { return TermOrder(Kind::lex, 0); }
  static TermOrder degrevlex() { return TermOrder(Kind::degrevlex, 0); }
  /// Degrevlex on the last `eliminated` variables, then degrevlex on the rest.
  static TermOrder block(std::size_t eliminated) { return TermOrder(Kind::block, eliminated); }

  Kind kind() const { return kind_; }
  std::size_t eliminated() const { return eliminated_; }

  /// True iff every monomial involving x_{keep+1}..x_l exceeds every monomial
  /// in x_1..x_keep.
  bool eliminates(std::size_t nvars, std::size_t keep) const;
  /// The order induced on the first `keep` variables.
  TermOrder restricted(std::size_t nvars, std::size_t keep) const;

  std::string to_string() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind kind, std::size_t eliminated) : kind_(kind), eliminated_(eliminated) {}
  Kind kind_;
  std::size_t eliminated_;
};

/// Three-way comparison of a and b under `order`. Throws std::invalid_argument
/// on mismatched ring dimensions.
std::strong_ordering compare(const TermOrder& order, const Monomial& a, const Monomial& b);

/// Strict-weak "greater" functor for descending sorts.
struct MonomialGreater {
  TermOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(order, a, b) == std::strong_ordering::greater;
  }
};

/// The polynomial ring K[x_1..x_l] with a distinguished subring on the first
/// `kept` variables.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, FieldSpec field, std::size_t kept);
  PolyRing(std::vector<std::string> names, FieldSpec field)
      : PolyRing(names, field, names.size()) {}
  /// Ring with variables named prefix1..prefixN.
  static PolyRing standard(std::size_t nvars, FieldSpec field, const std::string& prefix = "x");

  std::size_t nvars() const { return names_.size(); }
  std::size_t kept() const { return kept_; }
  const std::vector<std::string>& names() const { return names_; }
  const FieldSpec& field() const { return field_; }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;
  PolyRing subring(std::size_t keep) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  std::vector<std::string> names_;
  FieldSpec field_;
  std::size_t kept_;
};

/// Binomial coefficient with overflow detection (throws std::overflow_error).
std::int64_t binomial(std::int64_t n, std::int64_t k);
/// Number of monomials of degree t in nvars variables.
std::int64_t monomial_count(std::size_t nvars, std::int64_t t);

}  // namespace regcert
