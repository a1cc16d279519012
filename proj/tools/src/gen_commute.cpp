// Builds the certificate that \/ commutes. The three replacement steps
// rewrite every occurrence of a disjunct inside the expanded join, which is
// too long to write by hand.
#include <iostream>

#include "sqmv/proofkit/axioms.hpp"
#include "sqmv/proofkit/builder.hpp"
#include "sqmv/proofkit/transformers.hpp"
#include "sqmv/syntax/parse.hpp"

using namespace sqmv;
using namespace sqmv::proofkit;

namespace {

Term w(const char* text) { return syntax::parse(text, syntax::Signature::W); }

// x <-> (r -> r) -> x from the two directions of Q3, as one-line scripts.
Biconditional drop_prefix(const char* x) {
  Term t = w(x);
  Term pre = Term::impl(w("r -> r"), t);
  ProofBuilder lr(System::SqL), rl(System::SqL);
  lr.axiom(Term::impl(pre, t), "Q3");
  rl.axiom(Term::impl(t, pre), "Q3");
  return {lr.script(), rl.script()};
}

}  // namespace

int main() {
  ProofBuilder b(System::SqL);
  std::size_t l1 = b.axiom(w("((r -> r) -> (p \\/ q)) -> (((r -> r) -> q) \\/ ((r -> r) -> p))"), "Q7");
  std::size_t l2 = b.axiom(w("(p \\/ q) -> ((r -> r) -> (p \\/ q))"), "Q3");
  std::size_t l3 = b.lemma(w("(p \\/ q) -> (((r -> r) -> q) \\/ ((r -> r) -> p))"), "3", {l2, l1});

  std::size_t step = b.embed(replace_all(w("((r -> r) -> q) \\/ ((r -> r) -> p)"), drop_prefix("q")).lr);
  std::size_t l4 = b.lemma(w("(p \\/ q) -> (q \\/ ((r -> r) -> p))"), "3", {l3, step});

  step = b.embed(replace_all(w("q \\/ ((r -> r) -> p)"), drop_prefix("p")).lr);
  b.lemma(w("(p \\/ q) -> (q \\/ p)"), "3", {l4, step});

  std::cout << "# generated by sqmv-gen-commute; do not edit\n" << format_script(b.script());
  return 0;
}
