#include "sqmv/syntax/abbrev.hpp"

#include <unordered_map>

#include "sqmv/error.hpp"

namespace sqmv::syntax {

Term pos_def(const Term& x, Signature sig) {
  if (sig == Signature::MV) return Term::oplus(Term::one(), Term::oplus(Term::uminus(Term::one()), x));
  return Term::impl(Term::impl(x, Term::one()), Term::one());
}

Term neg_def(const Term& x, Signature sig) {
  if (sig == Signature::MV) return Term::oplus(Term::uminus(Term::one()), Term::oplus(Term::one(), x));
  Term n1 = Term::neg(Term::one());
  return Term::impl(Term::impl(x, n1), n1);
}

Term join(const Term& x, const Term& y, Signature sig) {
  Term xp = Term::pos(x), xn = Term::negpart(x), yp = Term::pos(y), yn = Term::negpart(y);
  if (sig == Signature::MV) {
    Term a = Term::oplus(xp, Term::pos(Term::oplus(Term::uminus(xp), yp)));
    Term b = Term::oplus(xn, Term::pos(Term::oplus(Term::uminus(xn), yn)));
    return Term::oplus(a, b);
  }
  Term a = Term::impl(Term::pos(Term::impl(xp, yp)), Term::negpart(Term::neg(x)));
  Term b = Term::impl(Term::negpart(Term::impl(yn, xn)), xn);
  return Term::impl(a, b);
}

namespace {

Term expand(const Term& t, Signature sig, std::unordered_map<Term, Term, TermHash>& memo) {
  if (t.arity() == 0) return t;
  if (auto it = memo.find(t); it != memo.end()) return it->second;
  Term a = expand(t.child(0), sig, memo);
  Term r;
  if (t.kind() == Kind::PosPart)
    r = pos_def(a, sig);
  else if (t.kind() == Kind::NegPart)
    r = neg_def(a, sig);
  else if (t.arity() == 1)
    r = Term::make(t.kind(), a);
  else
    r = Term::make(t.kind(), a, expand(t.child(1), sig, memo));
  memo.emplace(t, r);
  return r;
}

}  // namespace

Term expand_abbreviations(const Term& t, Signature sig, ExpansionMode mode, bool target_strong) {
  if (mode == ExpansionMode::Primitive) return t;
  if (!target_strong) throw ModeError("STRONG expansion requested for a non-strong target");
  if (!has_abbreviations(t)) return t;
  std::unordered_map<Term, Term, TermHash> memo;
  return expand(t, sig, memo);
}

}  // namespace sqmv::syntax
