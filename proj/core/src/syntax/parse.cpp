#include "sqmv/syntax/parse.hpp"

#include <cctype>

#include "sqmv/error.hpp"
#include "sqmv/syntax/abbrev.hpp"

namespace sqmv::syntax {

namespace {

enum class Tok { End, Var, Zero, One, LParen, RParen, Minus, Tilde, Plus, Arrow, Iff, Join, PosSfx, NegSfx };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t p = i_;
    if (i_ >= s_.size()) return {Tok::End, p, ""};
    auto starts = [&](std::string_view w) { return s_.substr(i_, w.size()) == w; };
    auto take = [&](Tok k, std::size_t n) {
      Token t{k, p, std::string(s_.substr(i_, n))};
      i_ += n;
      return t;
    };
    char c = s_[i_];
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i_ + 1;
      while (j < s_.size() && (std::islower(static_cast<unsigned char>(s_[j])) ||
                               std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      return take(Tok::Var, j - i_);
    }
    if (c == '0' || c == '1') {
      if (i_ + 1 < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_ + 1])) || s_[i_ + 1] == '_'))
        throw SyntaxError(p, "constant 0 or 1");
      return take(c == '0' ? Tok::Zero : Tok::One, 1);
    }
    if (starts("<->")) return take(Tok::Iff, 3);
    if (starts("->")) return take(Tok::Arrow, 2);
    if (starts("(+)")) return take(Tok::Plus, 3);
    if (starts("\\/")) return take(Tok::Join, 2);
    if (starts("^+")) return take(Tok::PosSfx, 2);
    if (starts("^-")) return take(Tok::NegSfx, 2);
    if (c == '(') return take(Tok::LParen, 1);
    if (c == ')') return take(Tok::RParen, 1);
    if (c == '-') return take(Tok::Minus, 1);
    if (c == '~') return take(Tok::Tilde, 1);
    throw SyntaxError(p, "a term");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view s, Signature sig) : lex_(s), sig_(sig) { tok_ = lex_.next(); }

  Term infix() {
    Term l = join();
    if (tok_.kind == Tok::Arrow) {
      advance();
      return Term::impl(l, infix());
    }
    while (tok_.kind == Tok::Plus) {
      advance();
      l = Term::oplus(l, join());
    }
    return l;
  }

  const Token& peek() const { return tok_; }
  void advance() { tok_ = lex_.next(); }
  void expect(Tok k, const char* what) {
    if (tok_.kind != k) throw SyntaxError(tok_.pos, what);
    advance();
  }

 private:
  Term join() {
    Term l = unary();
    while (tok_.kind == Tok::Join) {
      advance();
      l = syntax::join(l, unary(), sig_);
    }
    return l;
  }

  Term unary() {
    if (tok_.kind == Tok::Minus) {
      advance();
      return Term::uminus(unary());
    }
    if (tok_.kind == Tok::Tilde) {
      advance();
      return Term::neg(unary());
    }
    Term t = atom();
    for (;;) {
      if (tok_.kind == Tok::PosSfx)
        t = Term::pos(t);
      else if (tok_.kind == Tok::NegSfx)
        t = Term::negpart(t);
      else
        break;
      advance();
    }
    return t;
  }

  Term atom() {
    Token t = tok_;
    switch (t.kind) {
      case Tok::Var: advance(); return Term::var(t.text);
      case Tok::Zero: advance(); return Term::zero();
      case Tok::One: advance(); return Term::one();
      case Tok::LParen: {
        advance();
        Term inner = infix();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: throw SyntaxError(t.pos, "variable, constant or '('");
    }
  }

  Lexer lex_;
  Signature sig_;
  Token tok_;
};

}  // namespace

std::pair<Term, std::optional<Term>> parse_biconditional(std::string_view text, Signature sig) {
  Parser p(text, sig);
  Term l = p.infix();
  std::optional<Term> r;
  if (p.peek().kind == Tok::Iff) {
    p.advance();
    r = p.infix();
  }
  if (p.peek().kind != Tok::End) throw SyntaxError(p.peek().pos, "end of input");
  require_signature(l, sig);
  if (r) require_signature(*r, sig);
  return {l, r};
}

Term parse(std::string_view text, Signature sig) {
  Parser p(text, sig);
  Term t = p.infix();
  if (p.peek().kind != Tok::End) throw SyntaxError(p.peek().pos, "end of input");
  require_signature(t, sig);
  return t;
}

namespace {

bool is_tight(const Term& t) { return t.arity() == 0 || t.kind() == Kind::PosPart || t.kind() == Kind::NegPart; }
bool is_binary(const Term& t) { return t.arity() == 2; }

void emit(const Term& t, std::string& out) {
  auto wrapped = [&](const Term& u, bool paren) {
    if (paren) out += '(';
    emit(u, out);
    if (paren) out += ')';
  };
  switch (t.kind()) {
    case Kind::Var: out += t.name(); return;
    case Kind::Zero: out += '0'; return;
    case Kind::One: out += '1'; return;
    case Kind::UMinus:
    case Kind::Neg:
      out += t.kind() == Kind::UMinus ? '-' : '~';
      wrapped(t.arg(), is_binary(t.arg()));
      return;
    case Kind::PosPart:
    case Kind::NegPart:
      wrapped(t.arg(), !is_tight(t.arg()));
      out += t.kind() == Kind::PosPart ? "^+" : "^-";
      return;
    case Kind::Impl:
      wrapped(t.left(), is_binary(t.left()));
      out += " -> ";
      wrapped(t.right(), t.right().kind() == Kind::OPlus);  // right-associative
      return;
    case Kind::OPlus:
      wrapped(t.left(), t.left().kind() == Kind::Impl);
      out += " (+) ";
      wrapped(t.right(), is_binary(t.right()));
      return;
  }
}

}  // namespace

std::string print(const Term& t) {
  std::string out;
  emit(t, out);
  return out;
}

}  // namespace sqmv::syntax
