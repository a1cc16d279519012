#include "sqmv/proofkit/transformers.hpp"

#include "sqmv/error.hpp"
#include "sqmv/proofkit/axioms.hpp"
#include "sqmv/proofkit/builder.hpp"
#include "sqmv/proofkit/checker.hpp"
#include "sqmv/syntax/parse.hpp"

namespace sqmv::proofkit {

using syntax::Kind;
using syntax::Path;

namespace {

Term impl(const Term& a, const Term& b) { return Term::impl(a, b); }

// The two sides of a script's conclusion, which must be an implication.
std::pair<Term, Term> sides(const ProofScript& s, const char* what) {
  if (s.lines.empty()) throw SourceProofInvalid(std::string(what) + " is empty");
  Term c = core(s.conclusion());
  if (c.kind() != Kind::Impl) throw SourceProofInvalid(std::string(what) + " does not conclude an implication");
  return {c.left(), c.right()};
}

// Proves p -> p[r1/path] (forward) or p[r1/path] -> p (backward).
// Negation and the antecedent of -> flip the direction needed below.
ProofScript replace_dir(const Term& p, const Path& path, std::size_t depth, bool forward, const Biconditional& eq,
                        const Term& r1) {
  if (depth == path.size()) return forward ? eq.lr : eq.rl;
  const int step = path[depth];
  const Term here = syntax::replace_at(p, Path(path.begin() + depth, path.end()), r1);
  ProofBuilder b(System::SqL);
  if (p.kind() == Kind::Neg) {
    // ~u <-> ~v from v -> u or u -> v by lemma 1
    std::size_t inner = b.embed(replace_dir(p.arg(), path, depth + 1, !forward, eq, r1));
    b.lemma(forward ? impl(p, here) : impl(here, p), "1", {inner});
    return b.script();
  }
  // p = u -> q; lemma 2: a->b, c->d |- (b->c) -> (a->d)
  const Term& u = p.left();
  const Term& q = p.right();
  if (step == 0) {
    std::size_t inner = b.embed(replace_dir(u, path, depth + 1, !forward, eq, r1));
    std::size_t refl = b.lemma(impl(q, q), "5");
    b.lemma(forward ? impl(p, here) : impl(here, p), "2", {inner, refl});
  } else {
    std::size_t refl = b.lemma(impl(u, u), "5");
    std::size_t inner = b.embed(replace_dir(q, path, depth + 1, forward, eq, r1));
    b.lemma(forward ? impl(p, here) : impl(here, p), "2", {refl, inner});
  }
  return b.script();
}

// Chains a -> b and b -> c into a -> c by lemma 3.
std::size_t chain(ProofBuilder& b, std::size_t ab, std::size_t bc) {
  Term f = impl(core(b.formula(ab)).left(), core(b.formula(bc)).right());
  return b.lemma(f, "3", {ab, bc});
}

const std::string& q_name(const std::string& p_name) {
  static const std::vector<std::pair<std::string, std::string>> map = {
      {"P1", "Q1"}, {"P2", "Q3"}, {"P3", "Q5"}, {"P4", "Q10"}, {"P5", "Q2"},
      {"P6", "Q9"}, {"P7", "Q4"}, {"P8", "Q6"}, {"P9", "Q7"},  {"P10", "Q8"},
  };
  for (const auto& [from, to] : map)
    if (from == p_name) return to;
  throw SourceProofInvalid("no sqL* counterpart for axiom " + p_name);
}

}  // namespace

Biconditional replacement_proof(const Term& p0, const Path& path, const Biconditional& equiv) {
  auto [p1, r1] = sides(equiv.lr, "forward half");
  auto [r1b, p1b] = sides(equiv.rl, "backward half");
  if (!(p1 == p1b && r1 == r1b)) throw SourceProofInvalid("the two halves do not prove converse implications");
  if (path.empty()) return equiv;
  const Term p = core(p0);
  if (syntax::subterm_at(p, path) != p1)
    throw PathMismatch("subterm at path is " + syntax::print(syntax::subterm_at(p, path)) + ", not " +
                       syntax::print(p1));
  return {replace_dir(p, path, 0, true, equiv, r1), replace_dir(p, path, 0, false, equiv, r1)};
}

Biconditional replace_all(const Term& p0, const Biconditional& equiv) {
  auto [p1, r1] = sides(equiv.lr, "forward half");
  const Term p = core(p0);
  auto paths = syntax::occurrences(p, p1);
  if (paths.empty()) {
    ProofBuilder b(System::SqL);
    b.lemma(impl(p, p), "5");
    return {b.script(), b.script()};
  }
  ProofBuilder fwd(System::SqL), bwd(System::SqL);
  Term cur = p;
  std::size_t acc_f = 0, acc_b = 0;
  for (const auto& path : paths) {
    Biconditional step = replacement_proof(cur, path, equiv);
    cur = syntax::replace_at(cur, path, r1);
    std::size_t f = fwd.embed(step.lr);
    acc_f = acc_f ? chain(fwd, acc_f, f) : f;
    std::size_t g = bwd.embed(step.rl);
    acc_b = acc_b ? chain(bwd, g, acc_b) : g;
  }
  return {fwd.script(), bwd.script()};
}

ProofScript lift_lstar_proof(const ProofScript& s, const std::string& prefix) {
  if (s.system != System::L) throw SourceProofInvalid("input is not an L* script");
  ProofVerdict v = check_proof(s);
  if (!v.accepted) {
    const auto& f = *v.first_failure;
    throw SourceProofInvalid("input rejected at line " + std::to_string(f.line) + " (" + reason_name(f.reason) +
                             ": " + f.detail + ")");
  }
  const Term x = Term::var(prefix);
  const Term xx = impl(x, x);
  ProofBuilder b(System::SqL, s.hypotheses);
  std::vector<std::size_t> lifted(s.lines.size() + 1, 0);  // proves (x->x)->q_i
  std::vector<std::size_t> bare(s.lines.size() + 1, 0);    // proves q_i, if such a line exists
  auto unprefixed = [&](std::size_t i) {
    if (!bare[i]) bare[i] = b.rule(s.lines[i - 1].formula, "AReg1", {lifted[i]});
    return bare[i];
  };
  for (std::size_t i = 1; i <= s.lines.size(); ++i) {
    const ProofLine& line = s.lines[i - 1];
    const Term& q = line.formula;
    if (const auto* a = std::get_if<AxiomRef>(&line.just)) {
      bare[i] = b.axiom(q, q_name(a->name), a->direction);
    } else if (const auto* h = std::get_if<HypRef>(&line.just)) {
      bare[i] = b.hyp(s.hypotheses[h->index - 1]);
    } else {
      const auto& r = std::get<RuleRef>(line.just);
      if (r.name == "R1") {
        lifted[i] = b.rule(impl(xx, q), "qMP", {lifted[r.premises[0]], lifted[r.premises[1]]});
        continue;
      }
      if (r.name == "R2") {
        std::size_t a = unprefixed(r.premises[0]);
        std::size_t c = unprefixed(r.premises[1]);
        bare[i] = b.rule(q, "R2'", {a, c});
      } else {  // R3
        bare[i] = b.rule(q, "R3'", {lifted[r.premises[0]]});
      }
    }
    lifted[i] = b.rule(impl(xx, q), "Reg", {bare[i]});
  }
  return b.script();
}

ProofScript deregularize_proof(const ProofScript& s) {
  if (s.lines.empty()) throw SourceProofInvalid("empty script");
  const Term c = core(s.conclusion());
  if (c.kind() != Kind::Impl || c.left().kind() != Kind::Impl || c.left().left() != c.left().right())
    throw SourceProofInvalid("conclusion " + syntax::print(s.conclusion()) + " is not of the form (r->r)->q");
  const Term rr = c.left();
  Term q = c.right();
  if (!syntax::is_regular(q)) throw NotRegular(syntax::print(q) + " is not regular");

  ProofBuilder b(System::SqL, s.hypotheses);
  std::size_t cur = b.embed(s);
  std::size_t negs = 0;
  while (q.kind() == Kind::Neg && q.arg().kind() == Kind::Neg) {
    // (r->r)->~~y and (r->r)->(~~y->y) give (r->r)->y
    const Term y = q.arg().arg();
    std::size_t dn = b.lemma(impl(q, y), "8b");
    std::size_t reg = b.rule(impl(rr, impl(q, y)), "Reg", {dn});
    cur = b.rule(impl(rr, y), "qMP", {cur, reg});
    q = y;
    negs += 2;
  }
  if (q.kind() == Kind::One) {
    cur = b.rule(q, "AReg4", {cur});
  } else if (q.kind() == Kind::Impl) {
    cur = b.rule(q, "AReg1", {cur});
  } else if (q.arg().kind() == Kind::One) {
    cur = b.rule(q, "AReg3", {cur});
  } else {
    cur = b.rule(q, "AReg2", {cur});
  }
  for (; negs > 0; negs -= 2) {
    q = Term::neg(Term::neg(q));
    cur = b.rule(q, "Inv1", {cur});
  }
  return b.script();
}

}  // namespace sqmv::proofkit
