#include "sqmv/syntax/schema.hpp"

#include <vector>

#include "sqmv/error.hpp"

namespace sqmv::syntax {

namespace {

bool match_rec(const Term& p, const Term& g, Assignment& sigma, std::vector<std::string>& added) {
  if (p.kind() == Kind::Var) {
    auto it = sigma.find(p.name());
    if (it != sigma.end()) return it->second == g;
    sigma.emplace(p.name(), g);
    added.push_back(p.name());
    return true;
  }
  if (p.kind() != g.kind()) return false;
  for (int i = 0; i < p.arity(); ++i)
    if (!match_rec(p.child(i), g.child(i), sigma, added)) return false;
  return true;
}

}  // namespace

bool match_into(const Term& pattern, const Term& ground, Assignment& sigma) {
  std::vector<std::string> added;
  if (match_rec(pattern, ground, sigma, added)) return true;
  for (const auto& n : added) sigma.erase(n);
  return false;
}

std::optional<Assignment> match_schema(const Schema& s, const Term& ground) {
  Assignment sigma;
  if (!match_into(s.pattern, ground, sigma)) return std::nullopt;
  return sigma;
}

Term substitute_partial(const Term& t, const Assignment& sigma) {
  if (t.kind() == Kind::Var) {
    auto it = sigma.find(t.name());
    return it == sigma.end() ? t : it->second;
  }
  if (t.arity() == 0) return t;
  Term a = substitute_partial(t.child(0), sigma);
  if (t.arity() == 1) return a.same_node(t.child(0)) ? t : Term::make(t.kind(), a);
  Term b = substitute_partial(t.child(1), sigma);
  if (a.same_node(t.child(0)) && b.same_node(t.child(1))) return t;
  return Term::make(t.kind(), a, b);
}

Term substitute(const Schema& s, const Assignment& sigma) {
  for (const auto& v : s.metavariables())
    if (!sigma.count(v)) throw MissingBinding("metavariable " + v + " is unbound");
  Term r = substitute_partial(s.pattern, sigma);
  require_signature(r, s.sig);
  return r;
}

}  // namespace sqmv::syntax
