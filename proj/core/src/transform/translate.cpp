#include "sqmv/transform/translate.hpp"

#include "sqmv/error.hpp"
#include "sqmv/models/classify.hpp"
#include "sqmv/models/standard.hpp"

namespace sqmv::transform {

using syntax::Kind;
using syntax::Signature;
using syntax::Term;

namespace {

Term rewrite(const Term& t, Signature from) {
  switch (t.kind()) {
    case Kind::Var:
    case Kind::One: return t;
    case Kind::Zero: return Term::impl(Term::one(), Term::one());
    case Kind::OPlus: return Term::impl(Term::neg(rewrite(t.left(), from)), rewrite(t.right(), from));
    case Kind::UMinus: return Term::neg(rewrite(t.arg(), from));
    case Kind::Impl: return Term::oplus(Term::uminus(rewrite(t.left(), from)), rewrite(t.right(), from));
    case Kind::Neg: return Term::uminus(rewrite(t.arg(), from));
    case Kind::PosPart: return Term::pos(rewrite(t.arg(), from));
    case Kind::NegPart: return Term::negpart(rewrite(t.arg(), from));
  }
  return t;
}

void require_strong(const models::Model& m) {
  bool strong;
  if (m.is_finite())
    strong = models::classify(m).flags.strong;
  else
    strong = m.declared_flags() && m.declared_flags()->strong;
  if (!strong) throw ClassError(m.name() + " is not known to be strong");
}

std::string renamed(const std::string& name, bool to_w) {
  if (to_w) return name + "@w";
  if (name.ends_with("@w")) return name.substr(0, name.size() - 2);
  return name + "@mv";
}

}  // namespace

Term mv_to_w_term(const Term& t) {
  syntax::require_signature(t, Signature::MV);
  return rewrite(t, Signature::MV);
}

Term w_to_mv_term(const Term& t) {
  syntax::require_signature(t, Signature::W);
  return rewrite(t, Signature::W);
}

models::Model mv_to_w_model(const models::Model& m) {
  if (m.signature() != Signature::MV) throw SignatureError(m.name() + " is not an mv model");
  require_strong(m);
  return models::w_view(m, renamed(m.name(), true));
}

models::Model w_to_mv_model(const models::Model& m) {
  if (m.signature() != Signature::W) throw SignatureError(m.name() + " is not a w model");
  require_strong(m);
  return models::mv_view(m, renamed(m.name(), false));
}

}  // namespace sqmv::transform
