#include "dq/expr.hpp"

#include <cctype>
#include <sstream>

#include "dq/errors.hpp"

namespace dq {

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Lexer {
  std::string_view text;
  size_t pos = 0;
  Tok tok = Tok::End;
  std::string value;  // for Number / Name

  explicit Lexer(std::string_view t) : text(t) { advance(); }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    value.clear();
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      // a '/' directly between digit runs is part of a rational literal
      if (pos < text.size() && text[pos] == '/' && pos + 1 < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      }
      value = std::string(text.substr(start, pos - start));
      tok = Tok::Number;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      value = std::string(text.substr(start, pos - start));
      tok = Tok::Name;
      return;
    }
    ++pos;
    switch (c) {
      case '+': tok = Tok::Plus; return;
      case '-': tok = Tok::Minus; return;
      case '*': tok = Tok::Star; return;
      case '^': tok = Tok::Caret; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      default: throw ParseError(std::string("unexpected character '") + c + "' in expression");
    }
  }
};

struct Parser {
  Lexer lex;
  const Vars& vars;
  int order;
  bool allow_lam;

  Parser(std::string_view text, const Vars& v, int n, bool lam)
      : lex(text), vars(v), order(n), allow_lam(lam) {}

  PolySeries parse() {
    PolySeries r = parse_expr();
    if (lex.tok != Tok::End) throw ParseError("trailing input in expression");
    return r;
  }

  PolySeries parse_expr() {
    int sign = 1;
    if (lex.tok == Tok::Plus || lex.tok == Tok::Minus) {
      sign = lex.tok == Tok::Minus ? -1 : 1;
      lex.advance();
    }
    PolySeries acc = parse_term();
    if (sign < 0) acc = -acc;
    while (lex.tok == Tok::Plus || lex.tok == Tok::Minus) {
      bool minus = lex.tok == Tok::Minus;
      lex.advance();
      PolySeries t = parse_term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  PolySeries parse_term() {
    PolySeries acc = parse_factor();
    while (lex.tok == Tok::Star) {
      lex.advance();
      acc = acc * parse_factor();
    }
    return acc;
  }

  PolySeries parse_factor() {
    PolySeries base = parse_atom();
    if (lex.tok == Tok::Caret) {
      lex.advance();
      if (lex.tok != Tok::Number) throw ParseError("expected integer exponent after '^'");
      Rational e = Rational::from_string(lex.value);
      if (!e.is_integer() || e.sign() < 0) throw ParseError("exponent must be a nonnegative integer");
      long long k = e.as_int64();
      lex.advance();
      PolySeries r = PolySeries::constant(Poly::constant(vars, Rational(1)), order);
      for (long long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  PolySeries parse_atom() {
    if (lex.tok == Tok::Number) {
      Rational q = Rational::from_string(lex.value);
      lex.advance();
      return PolySeries::constant(Poly::constant(vars, q), order);
    }
    if (lex.tok == Tok::Name) {
      std::string name = lex.value;
      lex.advance();
      if (name == "lam") {
        if (!allow_lam) throw ParseError("'lam' is not allowed in this context");
        PolySeries s = poly_series_zero(vars, order);
        if (order >= 1) s.set_coeff(1, Poly::constant(vars, Rational(1)));
        return s;
      }
      for (size_t i = 0; i < vars->size(); ++i)
        if ((*vars)[i] == name)
          return PolySeries::constant(Poly::variable(vars, i), order);
      std::string known;
      for (const auto& v : *vars) known += (known.empty() ? "" : ", ") + v;
      throw ParseError("unknown variable '" + name + "' (expected one of: " + known +
                       (allow_lam ? ", lam)" : ")"));
    }
    if (lex.tok == Tok::LParen) {
      lex.advance();
      PolySeries r = parse_expr();
      if (lex.tok != Tok::RParen) throw ParseError("missing ')'");
      lex.advance();
      return r;
    }
    throw ParseError("unexpected token in expression");
  }
};

void append_piece(std::string& out, bool first, const Rational& coeff, int lam_pow,
                  const Exponents& e, const Vars& vars) {
  Rational a = coeff.abs();
  bool neg = coeff.sign() < 0;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  std::vector<std::string> parts;
  bool has_symbol = lam_pow > 0 || total_degree(e) > 0;
  if (!a.is_one() || !has_symbol) parts.push_back(a.str());
  if (lam_pow == 1)
    parts.push_back("lam");
  else if (lam_pow > 1)
    parts.push_back("lam^" + std::to_string(lam_pow));
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    std::string p = (*vars)[i];
    if (e[i] > 1) p += "^" + std::to_string(int(e[i]));
    parts.push_back(std::move(p));
  }
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
}

}  // namespace

PolySeries parse_poly_series(std::string_view text, const Vars& vars, int order) {
  return Parser(text, vars, order, /*lam=*/true).parse();
}

Poly parse_poly(std::string_view text, const Vars& vars) {
  PolySeries s = Parser(text, vars, 0, /*lam=*/false).parse();
  return s.coeff(0);
}

ScalarSeries parse_scalar_series(std::string_view text, int order) {
  static const Vars kNoVars = make_vars({});
  PolySeries s = Parser(text, kNoVars, order, /*lam=*/true).parse();
  ScalarSeries r(Rational(0), order);
  for (int k = 0; k <= order; ++k) r.set_coeff(k, s.coeff(k).constant_value());
  return r;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_piece(out, first, c, 0, e, p.vars());
    first = false;
  }
  return out;
}

std::string to_string(const PolySeries& s) {
  std::string out;
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    for (const auto& [e, c] : s.coeff(k).terms()) {
      append_piece(out, first, c, k, e, s.coeff(k).vars());
      first = false;
    }
  }
  return first ? "0" : out;
}

std::string to_string(const ScalarSeries& s) {
  std::string out;
  bool first = true;
  Exponents none;
  static const Vars kNoVars = make_vars({});
  for (int k = 0; k <= s.order(); ++k) {
    if (s.coeff(k).is_zero()) continue;
    append_piece(out, first, s.coeff(k), k, none, kNoVars);
    first = false;
  }
  return first ? "0" : out;
}

std::string machine_format(const PolySeries& s) {
  std::ostringstream os;
  const Vars& vars = s.coeff(0).vars();
  os << "poly-series\n";
  os << "vars";
  for (const auto& v : *vars) os << ' ' << v;
  os << "\ntruncation " << s.order() << "\n";
  for (int k = 0; k <= s.order(); ++k) {
    if (s.coeff(k).is_zero()) continue;
    os << "lambda " << k << "\n";
    for (const auto& [e, c] : s.coeff(k).terms()) {
      os << "term";
      for (uint8_t x : e) os << ' ' << int(x);
      os << ' ' << c.str() << "\n";
    }
  }
  os << "end\n";
  return os.str();
}

std::string machine_format(const ScalarSeries& s) {
  std::ostringstream os;
  os << "scalar-series\ntruncation " << s.order() << "\n";
  for (int k = 0; k <= s.order(); ++k)
    if (!s.coeff(k).is_zero()) os << "coeff " << k << ' ' << s.coeff(k).str() << "\n";
  os << "end\n";
  return os.str();
}

}  // namespace dq
