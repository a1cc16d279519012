#include "sqmv/semantics/evaluate.hpp"

#include "sqmv/error.hpp"

namespace sqmv::semantics {

using syntax::Kind;

namespace {

Element eval(const Term& t, const Model& m, const Valuation& v) {
  switch (t.kind()) {
    case Kind::Var: {
      auto it = v.find(t.name());
      if (it == v.end()) throw UnboundVariable("variable " + t.name() + " is unbound");
      return it->second;
    }
    case Kind::Zero:
    case Kind::One: return m.constant(t.kind());
    default: break;
  }
  if (t.arity() == 1) return m.unary(t.kind(), eval(t.arg(), m, v));
  return m.binary(t.kind(), eval(t.left(), m, v), eval(t.right(), m, v));
}

}  // namespace

Element evaluate(const Term& t, const Model& m, const Valuation& v) {
  syntax::require_signature(t, m.signature());
  for (const auto& name : syntax::variables(t)) {
    auto it = v.find(name);
    if (it == v.end()) throw UnboundVariable("variable " + name + " is unbound");
    m.require_member(it->second);
  }
  Element r = eval(t, m, v);
  m.require_member(r);
  return r;
}

}  // namespace sqmv::semantics
