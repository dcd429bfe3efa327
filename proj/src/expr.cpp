#include "neck/expr.hpp"

#include <cctype>
#include <sstream>

namespace neck {

namespace {

struct Token {
  enum Kind { Ident, Number, Sym, End } kind = End;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(tok_.pos, msg); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw Error(ErrorKind::Parse,
                "expression error at offset " + std::to_string(pos) + ": " + msg);
  }

  bool accept_sym(char c) {
    if (tok_.kind == Token::Sym && tok_.text[0] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect_sym(char c) {
    if (!accept_sym(c)) fail(std::string("expected '") + c + "'");
  }

private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_ = Token{Token::End, "", i_};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = Token{Token::Number, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      tok_ = Token{Token::Ident, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    tok_ = Token{Token::Sym, std::string(1, c), i_};
    ++i_;
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

Arrow parse_arrow(Lexer& lex, const Quiver& q) {
  if (lex.peek().kind != Token::Ident) lex.fail("expected an arrow name");
  Token t = lex.take();
  auto e = q.find_edge(t.text);
  if (!e) lex.fail_at(t.pos, "unknown edge '" + t.text + "'");
  bool starred = lex.accept_sym('*');
  return Arrow{*e, starred};
}

long long parse_int(Lexer& lex) {
  if (lex.peek().kind != Token::Number) lex.fail("expected a number");
  return std::stoll(lex.take().text);
}

Rat parse_rational(Lexer& lex) {
  long long num = parse_int(lex);
  if (lex.accept_sym('/')) {
    long long den = parse_int(lex);
    if (den == 0) lex.fail("zero denominator");
    return Rat(num) / den;
  }
  return Rat(num);
}

int parse_vertex(Lexer& lex, const Quiver& q) {
  if (lex.peek().kind != Token::Ident) lex.fail("expected a vertex name");
  Token t = lex.take();
  auto v = q.find_vertex(t.text);
  if (!v) lex.fail_at(t.pos, "unknown vertex '" + t.text + "'");
  return *v;
}

CyclicWord parse_cyc(Lexer& lex, const Quiver& q) {
  lex.expect_sym('(');
  std::vector<Arrow> arrows;
  arrows.push_back(parse_arrow(lex, q));
  while (lex.accept_sym(',')) arrows.push_back(parse_arrow(lex, q));
  lex.expect_sym(')');
  return canonical_cycle(q, arrows);
}

Link parse_link(Lexer& lex, const Quiver& q) {
  lex.expect_sym('(');
  std::vector<HeightedCycle> cycles;
  std::vector<int> idems;
  if (!lex.accept_sym(')')) {
    do {
      if (lex.accept_sym('[')) {
        HeightedCycle c;
        while (!lex.accept_sym(']')) {
          Arrow a = parse_arrow(lex, q);
          lex.expect_sym('@');
          int h = static_cast<int>(parse_int(lex));
          c.push_back(HeightedArrow{a, h});
        }
        if (c.empty()) lex.fail("empty link component");
        cycles.push_back(std::move(c));
      } else if (lex.peek().kind == Token::Ident && lex.peek().text == "idem") {
        lex.take();
        lex.expect_sym('(');
        idems.push_back(parse_vertex(lex, q));
        lex.expect_sym(')');
      } else {
        lex.fail("expected '[' or idem(...) inside link(...)");
      }
    } while (lex.accept_sym(';'));
    lex.expect_sym(')');
  }
  return Link::make(q, std::move(cycles), std::move(idems));
}

// --- algebra reading -------------------------------------------------------

AlgebraElement parse_alg_expr(Lexer& lex, const Quiver& q);

AlgebraElement parse_alg_factor(Lexer& lex, const Quiver& q) {
  const Token& t = lex.peek();
  if (t.kind == Token::Number) {
    return AlgebraElement::unit(HPoly(parse_rational(lex)));
  }
  if (t.kind == Token::Sym && t.text[0] == '(') {
    lex.take();
    AlgebraElement e = parse_alg_expr(lex, q);
    lex.expect_sym(')');
    return e;
  }
  if (t.kind != Token::Ident) lex.fail("expected a factor");
  if (t.text == "h") {
    lex.take();
    int exp = 1;
    if (lex.accept_sym('^')) exp = static_cast<int>(parse_int(lex));
    if (exp < 0) lex.fail("negative h-exponent");
    return AlgebraElement::unit(HPoly::monomial(1, 2 * exp));
  }
  if (t.text == "cyc") {
    lex.take();
    return AlgebraElement(lift(q, LieMonomial::cycle(parse_cyc(lex, q))));
  }
  if (t.text == "idem") {
    lex.take();
    lex.expect_sym('(');
    int v = parse_vertex(lex, q);
    lex.expect_sym(')');
    return AlgebraElement(lift(q, LieMonomial::idem(v)));
  }
  if (t.text == "link") {
    lex.take();
    return AlgebraElement(parse_link(lex, q));
  }
  lex.fail("unexpected identifier '" + t.text + "'");
}

AlgebraElement parse_alg_term(Lexer& lex, const Quiver& q) {
  AlgebraElement e = parse_alg_factor(lex, q);
  while (lex.peek().kind == Token::Sym && lex.peek().text[0] == '*') {
    lex.take();
    e = multiply(q, e, parse_alg_factor(lex, q));
  }
  return e;
}

AlgebraElement parse_alg_expr(Lexer& lex, const Quiver& q) {
  bool neg = lex.accept_sym('-');
  AlgebraElement e = parse_alg_term(lex, q);
  if (neg) e = e.scale(HPoly(Rat(-1)));
  while (lex.peek().kind == Token::Sym &&
         (lex.peek().text[0] == '+' || lex.peek().text[0] == '-')) {
    bool minus = lex.take().text[0] == '-';
    AlgebraElement rhs = parse_alg_term(lex, q);
    e = minus ? e - rhs : e + rhs;
  }
  return e;
}

// --- Lie reading -------------------------------------------------------------

struct LieValue {
  bool is_scalar = false;
  Rat scalar;
  LieElement elem;
};

LieValue parse_lie_expr(Lexer& lex, const Quiver& q);

LieValue parse_lie_factor(Lexer& lex, const Quiver& q) {
  const Token& t = lex.peek();
  if (t.kind == Token::Number) return LieValue{true, parse_rational(lex), {}};
  if (t.kind == Token::Sym && t.text[0] == '(') {
    lex.take();
    LieValue v = parse_lie_expr(lex, q);
    lex.expect_sym(')');
    return v;
  }
  if (t.kind != Token::Ident) lex.fail("expected a factor");
  if (t.text == "cyc") {
    lex.take();
    return LieValue{false, 0, LieElement(LieMonomial::cycle(parse_cyc(lex, q)))};
  }
  if (t.text == "idem") {
    lex.take();
    lex.expect_sym('(');
    int v = parse_vertex(lex, q);
    lex.expect_sym(')');
    return LieValue{false, 0, LieElement(LieMonomial::idem(v))};
  }
  if (t.text == "h" || t.text == "link")
    lex.fail("'" + t.text + "' is not a Lie-algebra expression");
  lex.fail("unexpected identifier '" + t.text + "'");
}

LieValue parse_lie_term(Lexer& lex, const Quiver& q) {
  LieValue v = parse_lie_factor(lex, q);
  while (lex.peek().kind == Token::Sym && lex.peek().text[0] == '*') {
    lex.take();
    LieValue w = parse_lie_factor(lex, q);
    if (v.is_scalar && w.is_scalar) {
      v.scalar *= w.scalar;
    } else if (v.is_scalar) {
      v = LieValue{false, 0, w.elem.scale(v.scalar)};
    } else if (w.is_scalar) {
      v.elem = v.elem.scale(w.scalar);
    } else {
      lex.fail("Lie elements have no product; use the bracket");
    }
  }
  return v;
}

LieElement as_elem(const Quiver&, const LieValue& v, Lexer& lex) {
  if (!v.is_scalar) return v.elem;
  if (v.scalar == 0) return LieElement();
  lex.fail("a bare scalar is not a Lie element");
}

LieValue parse_lie_expr(Lexer& lex, const Quiver& q) {
  bool neg = lex.accept_sym('-');
  LieValue v = parse_lie_term(lex, q);
  if (neg) {
    if (v.is_scalar)
      v.scalar = -v.scalar;
    else
      v.elem = v.elem.scale(-1);
  }
  while (lex.peek().kind == Token::Sym &&
         (lex.peek().text[0] == '+' || lex.peek().text[0] == '-')) {
    bool minus = lex.take().text[0] == '-';
    LieValue w = parse_lie_term(lex, q);
    LieElement rhs = as_elem(q, w, lex);
    LieElement cur = as_elem(q, v, lex);
    v = LieValue{false, 0, minus ? cur - rhs : cur + rhs};
  }
  return v;
}

}  // namespace

AlgebraElement parse_algebra(const Quiver& q, const std::string& text) {
  Lexer lex(text);
  AlgebraElement e = parse_alg_expr(lex, q);
  if (lex.peek().kind != Token::End) lex.fail("trailing content");
  return e;
}

LieElement parse_lie(const Quiver& q, const std::string& text) {
  Lexer lex(text);
  LieValue v = parse_lie_expr(lex, q);
  if (lex.peek().kind != Token::End) lex.fail("trailing content");
  return as_elem(q, v, lex);
}

DimVector parse_dim_vector(const Quiver& q, const std::string& text) {
  std::vector<int> dims(q.num_vertices(), -1);
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Usage, "expected name=dim in '" + part + "'");
    std::string name = part.substr(0, eq);
    auto v = q.find_vertex(name);
    if (!v) throw Error(ErrorKind::Usage, "unknown vertex '" + name + "'");
    dims[*v] = std::stoi(part.substr(eq + 1));
  }
  for (int i = 0; i < q.num_vertices(); ++i)
    if (dims[i] < 0)
      throw Error(ErrorKind::Usage,
                  "vertex '" + q.vertex_name(i) + "' missing from the dimension vector");
  return DimVector::make(q, dims);
}

}  // namespace neck
