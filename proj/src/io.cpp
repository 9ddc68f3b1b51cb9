#include "regcert/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace regcert {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line), column_(column), message_(message) {}

namespace {

struct Token {
  enum class Kind { ident, number, symbol, end };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      Token t{Token::Kind::ident, "", line, column};
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        t.text += text[i];
        advance();
      }
      out.push_back(std::move(t));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t{Token::Kind::number, "", line, column};
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        t.text += text[i];
        advance();
      }
      out.push_back(std::move(t));
    } else if (std::string_view(";:,+-*^/=").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), line, column});
      advance();
    } else {
      throw ParseError(line, column, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::end, "", line, column});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
}

// A term before variable resolution.
struct PendingTerm {
  mpq_class coeff;
  std::vector<std::pair<Token, unsigned>> factors;
};
struct PendingPolynomial {
  Token start;
  std::vector<PendingTerm> terms;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  Token take() {
    Token t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_symbol(char c) const {
    return peek().kind == Token::Kind::symbol && peek().text[0] == c;
  }
  bool at_word(std::string_view w) const {
    return peek().kind == Token::Kind::ident && peek().text == w;
  }
  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(t.line, t.column, message);
  }
  Token expect_symbol(char c) {
    if (!at_symbol(c)) fail(peek(), std::string("expected '") + c + "', found " + describe(peek()));
    return take();
  }
  Token expect_word(std::string_view w) {
    if (!at_word(w)) fail(peek(), "expected '" + std::string(w) + "', found " + describe(peek()));
    return take();
  }
  Token expect_ident() {
    if (peek().kind != Token::Kind::ident) fail(peek(), "expected an identifier, found " + describe(peek()));
    return take();
  }
  unsigned expect_nat(std::uint64_t max = 0xFFFFFFFFu) {
    if (peek().kind != Token::Kind::number) fail(peek(), "expected a number, found " + describe(peek()));
    const Token t = take();
    if (t.text.size() > 10 || std::stoull(t.text) > max) fail(t, "number " + t.text + " is too large");
    return static_cast<unsigned>(std::stoull(t.text));
  }
  bool at_end() const { return peek().kind == Token::Kind::end; }

  FieldSpec field_clause() {
    expect_word("char");
    const Token t = peek();
    const unsigned p = expect_nat();
    if (p != 0 && !is_prime(p)) fail(t, "characteristic " + t.text + " is neither 0 nor a prime");
    if (p >= (1u << 31)) fail(t, "characteristic " + t.text + " is too large");
    expect_symbol(';');
    return FieldSpec(p);
  }

  mpq_class coefficient() {
    const Token num = take();
    mpz_class a(num.text);
    if (!at_symbol('/')) return mpq_class(a);
    const Token slash = take();
    if (peek().kind != Token::Kind::number) fail(slash, "expected a denominator after '/'");
    const Token den = take();
    mpz_class b(den.text);
    if (b == 0) fail(den, "zero denominator");
    mpq_class q(a, b);
    q.canonicalize();
    return q;
  }

  void monomial(PendingTerm& term) {
    while (true) {
      const Token v = expect_ident();
      unsigned e = 1;
      if (at_symbol('^')) {
        take();
        e = expect_nat(60000);
      }
      term.factors.emplace_back(v, e);
      if (!at_symbol('*')) return;
      const Token star = take();
      if (peek().kind != Token::Kind::ident) fail(star, "expected a variable after '*'");
    }
  }

  PendingTerm term() {
    PendingTerm t{1, {}};
    if (peek().kind == Token::Kind::number) {
      t.coeff = coefficient();
      if (!at_symbol('*')) return t;
      const Token star = take();
      if (peek().kind != Token::Kind::ident) fail(star, "expected a variable after '*'");
    } else if (peek().kind != Token::Kind::ident) {
      fail(peek(), "expected a term, found " + describe(peek()));
    }
    monomial(t);
    return t;
  }

  PendingPolynomial polynomial() {
    PendingPolynomial p{peek(), {}};
    bool negative = false;
    if (at_symbol('-') || at_symbol('+')) negative = take().text == "-";
    if (peek().kind != Token::Kind::number && peek().kind != Token::Kind::ident) {
      fail(peek(), "expected a term, found " + describe(peek()));
    }
    while (true) {
      PendingTerm t = term();
      if (negative) t.coeff = -t.coeff;
      p.terms.push_back(std::move(t));
      if (!at_symbol('+') && !at_symbol('-')) return p;
      const Token op = take();
      negative = op.text == "-";
      if (peek().kind != Token::Kind::number && peek().kind != Token::Kind::ident) {
        fail(op, "dangling '" + op.text + "': expected a term after it");
      }
    }
  }

  std::vector<PendingPolynomial> polynomial_list() {
    std::vector<PendingPolynomial> out{polynomial()};
    while (at_symbol(',')) {
      take();
      out.push_back(polynomial());
    }
    if (at_symbol(';')) take();
    if (!at_end()) fail(peek(), "unexpected " + describe(peek()) + " after the polynomial list");
    return out;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

RawPolynomial resolve(const PendingPolynomial& p, const PolyRing& ring) {
  std::map<Monomial, mpq_class, bool (*)(const Monomial&, const Monomial&)> merged(
      [](const Monomial& a, const Monomial& b) {
        return compare(TermOrder::lex(), a, b) == std::strong_ordering::greater;
      });
  for (const auto& t : p.terms) {
    Monomial m(ring.nvars());
    for (const auto& [tok, e] : t.factors) {
      const int idx = ring.index_of(tok.text);
      if (idx < 0) throw ParseError(tok.line, tok.column, "unknown variable '" + tok.text + "'");
      if (std::uint64_t(m[idx]) + e > 60000) {
        throw ParseError(tok.line, tok.column, "exponent of '" + tok.text + "' is too large");
      }
      m.set(static_cast<std::size_t>(idx), m[idx] + e);
    }
    merged[m] += t.coeff;
  }
  RawPolynomial out;
  for (auto& [m, c] : merged) {
    if (c != 0) out.push_back({c, m});
  }
  return out;
}

void check_field(const PendingPolynomial& p, const FieldSpec& field) {
  if (field.is_rational()) return;
  for (const auto& t : p.terms) {
    if (t.coeff.get_den() % field.characteristic() == 0) {
      throw ParseError(p.start.line, p.start.column,
                       "coefficient " + t.coeff.get_str() + " has a denominator divisible by " +
                           std::to_string(field.characteristic()));
    }
  }
}

// x2 < x10 < y1: compare the alphabetic stem, then the numeric suffix.
bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    std::string digits = s.substr(k);
    return std::make_tuple(s.substr(0, k), digits.size(), digits);
  };
  return split(a) < split(b);
}

IdealFile parse_ideal(Parser& ps) {
  std::optional<std::vector<std::string>> names;
  if (ps.at_word("ring")) {
    ps.take();
    names.emplace();
    while (ps.peek().kind == Token::Kind::ident) {
      const Token t = ps.take();
      if (std::find(names->begin(), names->end(), t.text) != names->end()) {
        ps.fail(t, "variable '" + t.text + "' declared twice");
      }
      if (names->size() == Monomial::kMaxVars) ps.fail(t, "too many variables");
      names->push_back(t.text);
    }
    if (names->empty()) ps.fail(ps.peek(), "ring needs at least one variable");
    ps.expect_symbol(';');
  }
  FieldSpec field;
  if (ps.at_word("char")) field = ps.field_clause();
  TermOrder order = TermOrder::lex();
  std::optional<Token> elim_token;
  std::size_t eliminated = 0;
  if (ps.at_word("order")) {
    ps.take();
    const Token t = ps.expect_ident();
    if (t.text == "lex") {
      order = TermOrder::lex();
    } else if (t.text == "degrevlex") {
      order = TermOrder::degrevlex();
    } else if (t.text == "elim") {
      elim_token = ps.peek();
      eliminated = ps.expect_nat(Monomial::kMaxVars);
    } else {
      ps.fail(t, "unknown order '" + t.text + "' (expected lex, degrevlex or elim k)");
    }
    ps.expect_symbol(';');
  }
  ps.expect_word("gens");
  ps.expect_symbol(':');
  const auto pending = ps.polynomial_list();
  if (!names) {
    names.emplace();
    for (const auto& p : pending) {
      for (const auto& t : p.terms) {
        for (const auto& [tok, e] : t.factors) {
          if (std::find(names->begin(), names->end(), tok.text) == names->end()) {
            names->push_back(tok.text);
          }
        }
      }
    }
    std::sort(names->begin(), names->end(), natural_less);
    if (names->empty()) names->push_back("x1");
    if (names->size() > Monomial::kMaxVars) ps.fail(pending.front().start, "too many variables");
  }
  if (elim_token) {
    if (eliminated > names->size()) {
      ps.fail(*elim_token, "cannot eliminate " + elim_token->text + " of " +
                               std::to_string(names->size()) + " variables");
    }
    order = TermOrder::block(eliminated);
  }
  const std::size_t kept = names->size() - (elim_token ? eliminated : 0);
  IdealFile file{PolyRing(*names, field, kept), order, {}};
  for (const auto& p : pending) {
    check_field(p, field);
    file.gens.push_back(resolve(p, file.ring));
  }
  return file;
}

ParamFile parse_param(Parser& ps) {
  ps.expect_word("param");
  ParamFile file;
  std::map<std::string, unsigned> seen;
  while (ps.at_word("n") || ps.at_word("m") || ps.at_word("d")) {
    const Token key = ps.take();
    ps.expect_symbol('=');
    const Token value = ps.peek();
    const unsigned v = ps.expect_nat(1000);
    if (v == 0) ps.fail(value, key.text + " must be positive");
    if (!seen.emplace(key.text, v).second) ps.fail(key, key.text + " given twice");
  }
  for (const char* k : {"n", "m", "d"}) {
    if (!seen.contains(k)) ps.fail(ps.peek(), std::string("param needs ") + k + "=<nat>");
  }
  file.n = seen["n"];
  file.m = seen["m"];
  file.d = seen["d"];
  if (file.m > Monomial::kMaxVars) ps.fail(ps.peek(), "too many source variables");
  ps.expect_symbol(';');
  if (ps.at_word("char")) file.field = ps.field_clause();
  const Token f_tok = ps.expect_word("f");
  ps.expect_symbol(':');
  const auto pending = ps.polynomial_list();
  if (pending.size() != file.n) {
    ps.fail(f_tok, "expected " + std::to_string(file.n) + " forms, found " + std::to_string(pending.size()));
  }
  const PolyRing ring = PolyRing::standard(file.m, file.field, "y");
  bool any_nonzero = false;
  for (const auto& p : pending) {
    check_field(p, file.field);
    RawPolynomial raw = resolve(p, ring);
    for (const auto& t : raw) {
      if (t.mono.degree() != file.d) {
        ps.fail(p.start, "form is not homogeneous of degree " + std::to_string(file.d));
      }
    }
    if (!file.field.is_rational()) {
      for (const auto& t : raw) any_nonzero = any_nonzero || !Zp(t.coeff, file.field).is_zero();
    } else {
      any_nonzero = any_nonzero || !raw.empty();
    }
    file.f.push_back(std::move(raw));
  }
  if (!any_nonzero) ps.fail(f_tok, "all forms are zero");
  return file;
}

template <class K>
std::string join(const std::vector<Polynomial<K>>& polys, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) out += ", ";
    out += polys[i].to_string(names);
  }
  return out;
}

template <class K>
std::string print_typed(const IdealFile& file) {
  std::vector<Polynomial<K>> gens;
  for (const auto& g : file.gens) gens.push_back(to_polynomial<K>(g, file.ring.nvars(), file.order, file.ring.field()));
  std::string out = "ring";
  for (const auto& n : file.ring.names()) out += " " + n;
  out += ";\nchar " + std::to_string(file.ring.field().characteristic()) + ";\norder " +
         file.order.to_string() + ";\ngens: " + join(gens, file.ring.names()) + "\n";
  return out;
}

template <class K>
std::string print_typed(const ParamFile& file) {
  const PolyRing ring = PolyRing::standard(file.m, file.field, "y");
  std::vector<Polynomial<K>> f;
  for (const auto& g : file.f) f.push_back(to_polynomial<K>(g, file.m, TermOrder::lex(), file.field));
  return "param n=" + std::to_string(file.n) + " m=" + std::to_string(file.m) + " d=" +
         std::to_string(file.d) + ";\nchar " + std::to_string(file.field.characteristic()) +
         ";\nf: " + join(f, ring.names()) + "\n";
}

template <class K>
RawPolynomial to_raw(const Polynomial<K>& p) {
  RawPolynomial out;
  for (const auto& t : p.terms()) {
    if constexpr (std::is_same_v<K, Rational>) {
      out.push_back({t.coeff.value(), t.mono});
    } else {
      out.push_back({mpq_class(static_cast<long>(t.coeff.symmetric())), t.mono});
    }
  }
  return out;
}

}  // namespace

InputFile parse_input(std::string_view text) {
  Parser ps(text);
  if (ps.at_word("param")) return parse_param(ps);
  return parse_ideal(ps);
}

IdealFile parse_ideal_file(std::string_view text) {
  Parser ps(text);
  return parse_ideal(ps);
}

ParamFile parse_param_file(std::string_view text) {
  Parser ps(text);
  return parse_param(ps);
}

std::string print(const IdealFile& file) {
  return file.ring.field().is_rational() ? print_typed<Rational>(file) : print_typed<Zp>(file);
}

std::string print(const ParamFile& file) {
  return file.field.is_rational() ? print_typed<Rational>(file) : print_typed<Zp>(file);
}

template <class K>
Polynomial<K> to_polynomial(const RawPolynomial& raw, std::size_t nvars, const TermOrder& order,
                            const FieldSpec& field) {
  std::vector<Term<K>> terms;
  for (const auto& t : raw) terms.push_back({K(t.coeff, field), t.mono});
  return Polynomial<K>::normalize(std::move(terms), nvars, order, field);
}

template <class K>
IdealPresentation<K> to_presentation(const IdealFile& file) {
  std::vector<Polynomial<K>> gens;
  for (const auto& g : file.gens) {
    gens.push_back(to_polynomial<K>(g, file.ring.nvars(), file.order, file.ring.field()));
  }
  return IdealPresentation<K>(file.ring, std::move(gens));
}

template <class K>
Parametrisation<K> to_parametrisation(const ParamFile& file) {
  Parametrisation<K> p{file.n, file.m, file.d, file.field, {}};
  for (const auto& g : file.f) p.f.push_back(to_polynomial<K>(g, file.m, TermOrder::lex(), file.field));
  return p;
}

template <class K>
IdealFile to_ideal_file(const IdealPresentation<K>& ideal, const TermOrder& order) {
  IdealFile file{ideal.ring(), order, {}};
  for (const auto& g : ideal.generators()) file.gens.push_back(to_raw(g));
  return file;
}

template <class K>
ParamFile to_param_file(const Parametrisation<K>& p) {
  ParamFile file{p.n, p.m, p.d, p.field, {}};
  for (const auto& g : p.f) file.f.push_back(to_raw(g));
  return file;
}

#define REGCERT_INSTANTIATE_IO(K)                                                              \
  template Polynomial<K> to_polynomial(const RawPolynomial&, std::size_t, const TermOrder&,    \
                                       const FieldSpec&);                                      \
  template IdealPresentation<K> to_presentation(const IdealFile&);                             \
  template Parametrisation<K> to_parametrisation(const ParamFile&);                            \
  template IdealFile to_ideal_file(const IdealPresentation<K>&, const TermOrder&);             \
  template ParamFile to_param_file(const Parametrisation<K>&);

REGCERT_INSTANTIATE_IO(Zp)
REGCERT_INSTANTIATE_IO(Rational)

}  // namespace regcert
