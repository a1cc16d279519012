#pragma once

#include <string>

#include "sqmv/proofkit/script.hpp"
#include "sqmv/syntax/term.hpp"

namespace sqmv::proofkit {

// A proof of a <-> b, i.e. one script per implication. Both share the
// hypotheses they need; embedding merges them.
struct Biconditional {
  ProofScript lr;  // concludes a -> b
  ProofScript rl;  // concludes b -> a
};

// Scripts produced below cite the seed lemmas by id ("1", "2", "3", "5",
// "8b") and check only against a registry holding them.

// From a proof of p1 <-> r1, where p1 sits at `path` in core(p), a proof
// of p <-> r with r = p[r1 / path]. Built along the path: a negation step
// uses lemma 1, an implication step lemmas 5 and 2, so the output grows
// linearly with the path length. The empty path returns `equiv` as is.
// PathMismatch if the path is invalid or does not lead to p1;
// SourceProofInvalid if `equiv` is not shaped like a biconditional.
Biconditional replacement_proof(const Term& p, const syntax::Path& path, const Biconditional& equiv);

// Every outermost occurrence of p1 in core(p) replaced in turn, the steps
// chained with lemma 3. No occurrence: p <-> p by lemma 5.
Biconditional replace_all(const Term& p, const Biconditional& equiv);

// L* derivation of q from hypotheses -> sqL* derivation of (x->x)->q from
// the same hypotheses, x the prefix variable. SourceProofInvalid unless
// the input is an L* script that checks.
ProofScript lift_lstar_proof(const ProofScript& s, const std::string& prefix = "p");

// sqL* script ending in (r->r)->q with q regular -> script ending in q.
// NotRegular if q is not; SourceProofInvalid if the conclusion lacks the
// (r->r)-> prefix. Double negations are stripped under the prefix with
// lemma 8b, then AReg1..4 drops the prefix and Inv1 restores them.
ProofScript deregularize_proof(const ProofScript& s);

}  // namespace sqmv::proofkit
