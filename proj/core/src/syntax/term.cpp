#include "sqmv/syntax/term.hpp"

#include <functional>

#include "sqmv/error.hpp"
#include "sqmv/syntax/parse.hpp"

namespace sqmv::syntax {

std::string_view signature_name(Signature s) { return s == Signature::MV ? "mv" : "w"; }

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Var: return "var";
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::OPlus: return "(+)";
    case Kind::UMinus: return "-";
    case Kind::Impl: return "->";
    case Kind::Neg: return "~";
    case Kind::PosPart: return "^+";
    case Kind::NegPart: return "^-";
  }
  return "?";
}

int kind_arity(Kind k) {
  switch (k) {
    case Kind::Var:
    case Kind::Zero:
    case Kind::One: return 0;
    case Kind::UMinus:
    case Kind::Neg:
    case Kind::PosPart:
    case Kind::NegPart: return 1;
    case Kind::OPlus:
    case Kind::Impl: return 2;
  }
  return 0;
}

bool kind_legal(Kind k, Signature s) {
  switch (k) {
    case Kind::Zero:
    case Kind::OPlus:
    case Kind::UMinus: return s == Signature::MV;
    case Kind::Impl:
    case Kind::Neg: return s == Signature::W;
    default: return true;
  }
}

Term Term::make(Kind k, Term a, Term b) {
  std::size_t h = static_cast<std::size_t>(k) * 0x9e3779b97f4a7c15ULL;
  std::size_t size = 1;
  if (!a.empty()) {
    h = (h ^ a.hash()) * 0x100000001b3ULL + 17;
    size += a.size();
  }
  if (!b.empty()) {
    h = (h ^ (b.hash() * 31 + 7)) * 0x100000001b3ULL;
    size += b.size();
  }
  return Term(std::make_shared<const Node>(Node{k, {}, std::move(a), std::move(b), h, size}));
}

Term Term::var(std::string name) {
  std::size_t h = std::hash<std::string>{}(name) ^ 0xabcdefULL;
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, {}, h, 1}));
}

Term Term::zero() {
  static const Term z = make(Kind::Zero);
  return z;
}
Term Term::one() {
  static const Term o = make(Kind::One);
  return o;
}
Term Term::oplus(Term l, Term r) { return make(Kind::OPlus, std::move(l), std::move(r)); }
Term Term::uminus(Term a) { return make(Kind::UMinus, std::move(a)); }
Term Term::impl(Term l, Term r) { return make(Kind::Impl, std::move(l), std::move(r)); }
Term Term::neg(Term a) { return make(Kind::Neg, std::move(a)); }
Term Term::pos(Term a) { return make(Kind::PosPart, std::move(a)); }
Term Term::negpart(Term a) { return make(Kind::NegPart, std::move(a)); }

bool operator==(const Term& x, const Term& y) {
  if (x.n_ == y.n_) return true;
  if (!x.n_ || !y.n_) return false;
  if (x.n_->hash != y.n_->hash || x.n_->size != y.n_->size || x.n_->kind != y.n_->kind) return false;
  if (x.kind() == Kind::Var) return x.name() == y.name();
  return x.n_->a == y.n_->a && x.n_->b == y.n_->b;
}

namespace {

template <class F>
void walk(const Term& t, F&& f) {
  f(t);
  for (int i = 0; i < t.arity(); ++i) walk(t.child(i), f);
}

}  // namespace

bool conforms(const Term& t, Signature s) {
  bool ok = true;
  walk(t, [&](const Term& u) { ok = ok && kind_legal(u.kind(), s); });
  return ok;
}

void require_signature(const Term& t, Signature s) {
  walk(t, [&](const Term& u) {
    if (!kind_legal(u.kind(), s))
      throw SignatureError("connective " + std::string(kind_name(u.kind())) + " is not in the " +
                           std::string(signature_name(s)) + " signature");
  });
}

std::optional<Signature> implied_signature(const Term& t) {
  bool mv = false, w = false;
  walk(t, [&](const Term& u) {
    if (!kind_legal(u.kind(), Signature::W)) mv = true;
    if (!kind_legal(u.kind(), Signature::MV)) w = true;
  });
  if (mv && w) throw SignatureError("term mixes connectives of both signatures");
  if (mv) return Signature::MV;
  if (w) return Signature::W;
  return std::nullopt;
}

std::set<std::string> variables(const Term& t) {
  std::set<std::string> out;
  walk(t, [&](const Term& u) {
    if (u.kind() == Kind::Var) out.insert(u.name());
  });
  return out;
}

std::size_t count_connective(const Term& t, Kind k) {
  std::size_t n = 0;
  walk(t, [&](const Term& u) { n += u.kind() == k; });
  return n;
}

bool is_regular(const Term& t) {
  const Term* u = &t;
  while (u->kind() == Kind::Neg || u->kind() == Kind::UMinus) u = &u->arg();
  return u->kind() != Kind::Var;
}

bool has_abbreviations(const Term& t) {
  return count_connective(t, Kind::PosPart) + count_connective(t, Kind::NegPart) > 0;
}

const Term& subterm_at(const Term& t, const Path& p) {
  const Term* u = &t;
  for (int i : p) {
    if (i < 0 || i >= u->arity()) throw PathMismatch("path leaves the term at " + print(*u));
    u = &u->child(i);
  }
  return *u;
}

namespace {

Term replace_rec(const Term& t, const Path& p, std::size_t depth, const Term& r) {
  if (depth == p.size()) return r;
  int i = p[depth];
  if (i < 0 || i >= t.arity()) throw PathMismatch("path leaves the term at " + print(t));
  Term a = t.child(0), b = t.arity() == 2 ? t.child(1) : Term();
  if (i == 0)
    a = replace_rec(a, p, depth + 1, r);
  else
    b = replace_rec(b, p, depth + 1, r);
  return Term::make(t.kind(), a, b);
}

void occ_rec(const Term& t, const Term& target, Path& cur, std::vector<Path>& out) {
  if (t == target) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < t.arity(); ++i) {
    cur.push_back(i);
    occ_rec(t.child(i), target, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Term replace_at(const Term& t, const Path& p, const Term& replacement) {
  return replace_rec(t, p, 0, replacement);
}

std::vector<Path> occurrences(const Term& t, const Term& target) {
  std::vector<Path> out;
  Path cur;
  occ_rec(t, target, cur, out);
  return out;
}

}  // namespace sqmv::syntax
