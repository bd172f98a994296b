#ifndef GERMLAB_PARSE_HPP
#define GERMLAB_PARSE_HPP

// Text format for map-germs (.germ files):
//
//   vars: x1, x2 | x1^3 + x1*x2 ; x2
//
// The header may end with a newline instead of '|'. Without a header the
// variables are inferred: x1..xN when every identifier has that shape,
// otherwise the distinct identifiers in sorted order. '#' starts a comment.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germlab/error.hpp"
#include "germlab/germ.hpp"
#include "germlab/poly.hpp"

namespace germlab {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        detail_(msg) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_, column_;
  std::string detail_;
};

namespace parse_detail {

enum class Tok { ident, number, plus, minus, star, caret, lparen, rparen, semi, bar, comma, colon, newline, end };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

inline std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      out.push_back({Tok::newline, "\n", line, col});
      advance(1);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    int l = line, cl = col;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case ';': k = Tok::semi; break;
      case '|': k = Tok::bar; break;
      case ',': k = Tok::comma; break;
      case ':': k = Tok::colon; break;
      default: {
        std::string shown = std::isprint(c) ? std::string(1, static_cast<char>(c)) : "byte " + std::to_string(c);
        throw ParseError(l, cl, "unexpected character '" + shown + "'");
      }
    }
    out.push_back({k, std::string(1, static_cast<char>(c)), l, cl});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

inline const char* describe(Tok k) {
  switch (k) {
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::caret: return "'^'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::semi: return "';'";
    case Tok::bar: return "'|'";
    case Tok::comma: return "','";
    case Tok::colon: return "':'";
    case Tok::newline: return "end of line";
    case Tok::end: return "end of input";
  }
  return "token";
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<std::string> vars) : t_(std::move(toks)), vars_(std::move(vars)) {}

  std::size_t pos = 0;

  const Token& peek() {
    skip_newlines();
    return t_[pos];
  }

  void skip_newlines() {
    while (t_[pos].kind == Tok::newline) ++pos;
  }

  [[noreturn]] void error(const Token& at, const std::string& msg) { throw ParseError(at.line, at.col, msg); }

  /// expr := term (('+'|'-') term)*
  Poly expr() {
    Poly r = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = t_[pos++].kind == Tok::minus;
      Poly b = term();
      r = minus ? r - b : r + b;
    }
    return r;
  }

  /// term := unary ('*' unary)*
  Poly term() {
    Poly r = unary();
    while (peek().kind == Tok::star) {
      const Token& op = t_[pos++];
      Poly b = unary();
      if (r.degree() + b.degree() > max_degree) error(op, "total degree exceeds " + std::to_string(max_degree));
      r = r * b;
    }
    return r;
  }

  /// unary := '-' unary | power
  Poly unary() {
    if (peek().kind == Tok::minus) {
      ++pos;
      if (++depth_ > max_depth) error(t_[pos], "expression nested too deeply");
      Poly r = -unary();
      --depth_;
      return r;
    }
    return power();
  }

  /// power := atom ('^' integer)?
  Poly power() {
    Poly base = atom();
    if (peek().kind == Tok::caret) {
      ++pos;
      const Token& e = peek();
      if (e.kind != Tok::number) error(e, "exponent must be a nonnegative integer literal");
      ++pos;
      // the lexer reads "x^3/2" as x^(3/2); split it back into (x^3)/2
      auto slash = e.text.find('/');
      std::string digits = e.text.substr(0, slash);
      if (digits.size() > 3 || std::stoi(digits) > max_degree) error(e, "exponent too large");
      int ex = std::stoi(digits);
      if (static_cast<long>(base.degree()) * ex > max_degree)
        error(e, "total degree exceeds " + std::to_string(max_degree));
      if (peek().kind == Tok::caret) error(peek(), "chained exponents are not allowed; use parentheses");
      Poly out = base.pow(ex);
      if (slash != std::string::npos) {
        Rat d = parse_rat(e.text.substr(slash + 1));
        if (sgn(d) == 0) error(e, "division by zero");
        out = out * (1 / d);
      }
      return out;
    }
    return base;
  }

  /// atom := number | identifier | '(' expr ')'
  Poly atom() {
    const Token& tok = peek();
    int n = static_cast<int>(vars_.size());
    switch (tok.kind) {
      case Tok::number: {
        ++pos;
        Rat v;
        try {
          v = parse_rat(tok.text);
        } catch (const Error& e) {
          error(tok, e.what());
        }
        return Poly::constant(n, v);
      }
      case Tok::ident: {
        ++pos;
        auto it = std::find(vars_.begin(), vars_.end(), tok.text);
        if (it == vars_.end()) error(tok, "unknown identifier '" + tok.text + "'");
        return Poly::variable(n, static_cast<int>(it - vars_.begin()));
      }
      case Tok::lparen: {
        ++pos;
        if (++depth_ > max_depth) error(tok, "expression nested too deeply");
        Poly r = expr();
        --depth_;
        if (peek().kind != Tok::rparen) error(peek(), std::string("expected ')', found ") + describe(peek().kind));
        ++pos;
        return r;
      }
      default: error(tok, std::string("expected a number, variable or '(', found ") + describe(tok.kind));
    }
  }

  const Token& token(std::size_t i) const { return t_[i]; }

 private:
  static constexpr int max_depth = 200;
  std::vector<Token> t_;
  std::vector<std::string> vars_;
  int depth_ = 0;
};

/// Natural order: "x2" before "x10".
inline bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    std::string digits = s.substr(k);
    return std::make_pair(s.substr(0, k), digits);
  };
  auto [pa, da] = split(a);
  auto [pb, db] = split(b);
  if (pa != pb) return a < b;
  if (da.size() != db.size()) return da.size() < db.size();
  return da < db;
}

inline std::vector<std::string> infer_vars(const std::vector<Token>& toks, std::size_t from) {
  std::vector<std::string> ids;
  for (std::size_t i = from; i < toks.size(); ++i)
    if (toks[i].kind == Tok::ident && std::find(ids.begin(), ids.end(), toks[i].text) == ids.end())
      ids.push_back(toks[i].text);
  bool indexed = !ids.empty();
  int max_index = 0;
  for (const auto& id : ids) {
    if (id.size() < 2 || id[0] != 'x' || id[1] == '0' || id.size() > 3 ||
        !std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      indexed = false;
      break;
    }
    max_index = std::max(max_index, std::stoi(id.substr(1)));
  }
  if (indexed && max_index <= max_vars) {
    std::vector<std::string> v;
    for (int i = 1; i <= max_index; ++i) v.push_back("x" + std::to_string(i));
    return v;
  }
  std::sort(ids.begin(), ids.end(), natural_less);
  if (ids.empty()) ids.push_back("x1");
  return ids;
}

}  // namespace parse_detail

/// Parses a single polynomial expression over the given variables.
inline Poly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  using namespace parse_detail;
  if (vars.empty() || static_cast<int>(vars.size()) > max_vars)
    throw ParseError(1, 1, "between 1 and " + std::to_string(max_vars) + " variables are supported");
  Parser p(lex(text), vars);
  Poly r = p.expr();
  if (p.peek().kind != Tok::end)
    p.error(p.peek(), std::string("unexpected ") + describe(p.peek().kind) + " after expression");
  return r;
}

/// Parses a map-germ. Components with a nonzero constant term are rejected.
inline MapGerm parse_map(std::string_view text) {
  using namespace parse_detail;
  auto toks = lex(text);
  std::size_t start = 0;
  while (toks[start].kind == Tok::newline) ++start;
  std::vector<std::string> vars;
  std::size_t body = start;
  if (toks[start].kind == Tok::ident && toks[start].text == "vars" && toks[start + 1].kind == Tok::colon) {
    std::size_t i = start + 2;
    for (;;) {
      if (toks[i].kind != Tok::ident)
        throw ParseError(toks[i].line, toks[i].col, std::string("expected variable name, found ") + describe(toks[i].kind));
      if (std::find(vars.begin(), vars.end(), toks[i].text) != vars.end())
        throw ParseError(toks[i].line, toks[i].col, "duplicate variable '" + toks[i].text + "'");
      vars.push_back(toks[i].text);
      ++i;
      if (toks[i].kind == Tok::comma) {
        ++i;
        continue;
      }
      break;
    }
    if (toks[i].kind != Tok::bar && toks[i].kind != Tok::newline)
      throw ParseError(toks[i].line, toks[i].col, std::string("expected '|' or end of line after variable list, found ") + describe(toks[i].kind));
    body = i + 1;
    if (static_cast<int>(vars.size()) > max_vars)
      throw ParseError(toks[start].line, toks[start].col, "at most " + std::to_string(max_vars) + " variables are supported");
  } else {
    vars = infer_vars(toks, start);
    if (static_cast<int>(vars.size()) > max_vars)
      throw ParseError(toks[start].line, toks[start].col, "at most " + std::to_string(max_vars) + " variables are supported");
  }
  Parser p(toks, vars);
  p.pos = body;
  std::vector<Poly> comps;
  for (;;) {
    const Token& first = p.peek();
    if (first.kind == Tok::end && comps.empty()) p.error(first, "expected at least one component");
    Poly c = p.expr();
    if (sgn(c.constant_term()) != 0) p.error(first, "nonzero constant term " + c.constant_term().get_str());
    comps.push_back(std::move(c));
    if (p.peek().kind == Tok::semi) {
      ++p.pos;
      continue;
    }
    if (p.peek().kind != Tok::end)
      p.error(p.peek(), std::string("expected ';' or end of input, found ") + describe(p.peek().kind));
    break;
  }
  return MapGerm(static_cast<int>(vars.size()), std::move(comps), vars);
}

/// Canonical text: "vars: x1, x2 | comp ; comp". Reparses to the same germ.
inline std::string render_map(const MapGerm& f) {
  std::string s = "vars: ";
  auto names = f.var_names();
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
  return s + " | " + f.to_string();
}

}  // namespace germlab

#endif  // GERMLAB_PARSE_HPP
