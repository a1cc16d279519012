#include "sqmv/proofkit/axioms.hpp"

#include "sqmv/error.hpp"
#include "sqmv/syntax/abbrev.hpp"
#include "sqmv/syntax/parse.hpp"

namespace sqmv::proofkit {

using syntax::Signature;

Term core(const Term& t) { return syntax::expand_abbreviations(t, Signature::W); }

namespace {

AxiomSchema axiom(const char* name, const char* text) {
  auto [l, r] = syntax::parse_biconditional(text, Signature::W);
  AxiomSchema a{name, {}};
  if (r) {
    a.forms.push_back(core(Term::impl(l, *r)));
    a.forms.push_back(core(Term::impl(*r, l)));
  } else {
    a.forms.push_back(core(l));
  }
  return a;
}

RuleSchema rule(const char* name, std::initializer_list<const char*> premises, const char* conclusion) {
  RuleSchema r{name, {}, core(syntax::parse(conclusion, Signature::W))};
  for (const char* p : premises) r.premises.push_back(core(syntax::parse(p, Signature::W)));
  return r;
}

// Shared texts: the sqL* and L* axioms coincide up to numbering.
constexpr const char* kContra = "(p -> q) <-> (~q -> ~p)";
constexpr const char* kOne = "1 <-> ((1 -> p) -> 1)";
constexpr const char* kPrefix = "p <-> ((q -> q) -> p)";
constexpr const char* kParts = "(p -> q) <-> ((q^+ -> p^-) -> (p^+ -> q^-))";
constexpr const char* kNegImpl = "~(p -> q) <-> (q -> p)";
constexpr const char* kPosMix = "(p -> (~p -> q))^+ <-> (p^+ -> (~p^+ -> q^+))";
constexpr const char* kJoinDist = "(p -> (q \\/ r)) <-> ((p -> r) \\/ (p -> q))";
constexpr const char* kJoinAssoc = "(p \\/ (q \\/ r)) <-> ((p \\/ q) \\/ r)";
constexpr const char* kExchange = "((p -> 1) -> ((q -> 1) -> r)) -> ((q -> 1) -> ((p -> 1) -> r))";
constexpr const char* kTop = "p -> 1";

}  // namespace

const std::vector<AxiomSchema>& axiom_table(System s) {
  static const std::vector<AxiomSchema> sq = {
      axiom("Q1", kContra),   axiom("Q2", kOne),      axiom("Q3", kPrefix),    axiom("Q4", kParts),
      axiom("Q5", kNegImpl),  axiom("Q6", kPosMix),   axiom("Q7", kJoinDist),  axiom("Q8", kJoinAssoc),
      axiom("Q9", kExchange), axiom("Q10", kTop),
  };
  static const std::vector<AxiomSchema> l = {
      axiom("P1", kContra),  axiom("P2", kPrefix),    axiom("P3", kNegImpl),  axiom("P4", kTop),
      axiom("P5", kOne),     axiom("P6", kExchange),  axiom("P7", kParts),    axiom("P8", kPosMix),
      axiom("P9", kJoinDist), axiom("P10", kJoinAssoc),
  };
  return s == System::SqL ? sq : l;
}

const std::vector<RuleSchema>& rule_table(System s) {
  static const std::vector<RuleSchema> sq = {
      rule("qMP", {"(r -> r) -> p", "(r -> r) -> (p -> q)"}, "(r -> r) -> q"),
      rule("Reg", {"p"}, "(r -> r) -> p"),
      rule("AReg1", {"(r -> r) -> (p -> q)"}, "p -> q"),
      rule("AReg2", {"(r -> r) -> ~(p -> q)"}, "~(p -> q)"),
      rule("AReg3", {"(r -> r) -> ~1"}, "~1"),
      rule("AReg4", {"(r -> r) -> 1"}, "1"),
      rule("Inv1", {"p"}, "~~p"),
      rule("Inv2", {"~~p"}, "p"),
      rule("Flat", {"p", "~1"}, "~p"),
      rule("R2'", {"p -> q", "r -> t"}, "(q -> r) -> (p -> t)"),
      rule("R3'", {"(r -> r) -> p"}, "p^-"),
  };
  static const std::vector<RuleSchema> l = {
      rule("R1", {"p", "p -> q"}, "q"),
      rule("R2", {"p -> q", "r -> t"}, "(q -> r) -> (p -> t)"),
      rule("R3", {"p"}, "p^-"),
  };
  return s == System::SqL ? sq : l;
}

const AxiomSchema& find_axiom(System s, const std::string& name) {
  for (const auto& a : axiom_table(s))
    if (a.name == name) return a;
  throw UnknownAxiom("no axiom " + name + " in " + system_name(s));
}

const RuleSchema* find_rule(System s, const std::string& name) {
  for (const auto& r : rule_table(s))
    if (r.name == name) return &r;
  return nullptr;
}

std::vector<Term> instantiate_axiom(System s, const std::string& name, const syntax::Assignment& sigma) {
  const AxiomSchema& a = find_axiom(s, name);
  std::vector<Term> out;
  for (const auto& f : a.forms) out.push_back(core(syntax::substitute({f, Signature::W}, sigma)));
  return out;
}

}  // namespace sqmv::proofkit
