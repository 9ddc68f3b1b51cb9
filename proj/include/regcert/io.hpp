#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "regcert/groebner.hpp"

namespace regcert {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// Message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Field-agnostic polynomial as read from a file.
struct RawTerm {
  mpq_class coeff;
  Monomial mono;
};
using RawPolynomial = std::vector<RawTerm>;

/// ring <ident>+ ; char <0|p> ; order <lex|degrevlex|elim k> ; gens: <poly>, ...
/// The ring, char and order clauses are optional; without a ring clause the
/// variables are those used by the generators, sorted by name.
struct IdealFile {
  PolyRing ring;
  TermOrder order;
  std::vector<RawPolynomial> gens;
};

/// param n=<nat> m=<nat> d=<nat> ; [char <0|p> ;] f: <poly>, ...
/// over the variables y1..ym.
struct ParamFile {
  unsigned n = 0;
  unsigned m = 0;
  unsigned d = 0;
  FieldSpec field;
  std::vector<RawPolynomial> f;
};

using InputFile = std::variant<IdealFile, ParamFile>;

/// Dispatches on the leading keyword.
InputFile parse_input(std::string_view text);
IdealFile parse_ideal_file(std::string_view text);
ParamFile parse_param_file(std::string_view text);

/// Normalized text: coefficients reduced into the field, terms sorted by the
/// order, one clause per line. Parsing the output and printing again gives
/// the same bytes.
std::string print(const IdealFile& file);
std::string print(const ParamFile& file);

/// The n forms f_i in K[y_1..y_m], homogeneous of degree d and not all zero.
template <class K>
struct Parametrisation {
  unsigned n = 0;
  unsigned m = 0;
  unsigned d = 0;
  FieldSpec field;
  std::vector<Polynomial<K>> f;

  PolyRing source_ring() const { return PolyRing::standard(m, field, "y"); }
};

template <class K>
Polynomial<K> to_polynomial(const RawPolynomial& raw, std::size_t nvars, const TermOrder& order,
                            const FieldSpec& field);

template <class K>
IdealPresentation<K> to_presentation(const IdealFile& file);

template <class K>
Parametrisation<K> to_parametrisation(const ParamFile& file);

template <class K>
IdealFile to_ideal_file(const IdealPresentation<K>& ideal, const TermOrder& order);

template <class K>
ParamFile to_param_file(const Parametrisation<K>& p);

}  // namespace regcert
