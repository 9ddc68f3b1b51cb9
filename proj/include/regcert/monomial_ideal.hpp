#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "regcert/monomial.hpp"

namespace regcert {

class PowerMap;

/// Monomial ideal kept by its minimal generators, sorted descending in lex.
/// An empty generator list is the zero ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const;
  std::uint32_t max_generator_degree() const;
  Monomial lcm_of_generators() const;

  /// Generators lying in the first `keep` variables, as an ideal of that ring.
  MonomialIdeal intersect_subring(std::size_t keep) const;
  MonomialIdeal colon_variable(std::size_t k) const;
  MonomialIdeal plus_variable(std::size_t k) const;
  MonomialIdeal image(const PowerMap& phi) const;

  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Degree-by-degree enumeration of the monomials outside a monomial ideal,
/// optionally restricted to divisors of `bound`. A monomial of degree t+1 is
/// standard iff all of its degree-t divisors are standard and it is not a
/// minimal generator.
class StandardMonomials {
 public:
  explicit StandardMonomials(const MonomialIdeal& ideal,
                             std::optional<Monomial> bound = std::nullopt);

  /// Standard monomials of degree t, descending in lex.
  const std::vector<Monomial>& degree(std::uint32_t t);
  bool is_standard(const Monomial& m);
  /// Position of m in degree(m.degree()), or -1 if m is not standard.
  std::int64_t index_of(const Monomial& m);
  /// Frees the tables of degrees below t; later queries there are errors.
  void release_below(std::uint32_t t);

 private:
  void extend_to(std::uint32_t t);

  std::size_t nvars_;
  bool unit_;
  std::optional<Monomial> bound_;
  std::unordered_set<Monomial, MonomialHash> generators_;
  std::vector<std::vector<Monomial>> lists_;
  std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index_;
  std::uint32_t released_below_ = 0;
};

/// Degree-t monomials divisible by no generator of M, descending in lex.
std::vector<Monomial> standard_monomial_basis(const MonomialIdeal& M, std::uint32_t t);

/// All monomials of degree t in nvars variables, descending in lex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t t);

}  // namespace regcert
