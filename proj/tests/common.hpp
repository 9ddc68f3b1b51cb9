#pragma once

#include <string>
#include <vector>

#include "regcert/io.hpp"

namespace regcert::testing {

inline FieldSpec field_for(bool rational) { return rational ? FieldSpec::rationals() : FieldSpec(); }

/// Ideal from file text; the char clause of `text` is replaced by `field`.
template <class K>
IdealPresentation<K> ideal(const std::string& text, const FieldSpec& field = FieldSpec()) {
  IdealFile file = parse_ideal_file(text);
  file.ring = PolyRing(file.ring.names(), field, file.ring.kept());
  return to_presentation<K>(file);
}

template <class K>
Polynomial<K> poly(const std::string& ring, const std::string& text, const FieldSpec& field = FieldSpec()) {
  return ideal<K>("ring " + ring + "; gens: " + text, field).generators().front();
}

inline Monomial mono(std::vector<unsigned> e) { return Monomial(e); }

inline MonomialIdeal monomial_ideal(std::size_t n, std::vector<std::vector<unsigned>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.push_back(Monomial(g));
  return MonomialIdeal(n, std::move(ms));
}

}  // namespace regcert::testing
