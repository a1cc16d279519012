#include "sqmv/proofkit/builder.hpp"

#include "sqmv/proofkit/axioms.hpp"

namespace sqmv::proofkit {

ProofBuilder::ProofBuilder(System s, std::vector<Term> hypotheses) {
  script_.system = s;
  script_.hypotheses = std::move(hypotheses);
}

std::size_t ProofBuilder::push(const Term& f, Justification j) {
  script_.lines.push_back({f, std::move(j)});
  return script_.lines.size();
}

std::size_t ProofBuilder::hyp_index(const Term& f) {
  Term c = core(f);
  for (std::size_t i = 0; i < script_.hypotheses.size(); ++i)
    if (core(script_.hypotheses[i]) == c) return i + 1;
  script_.hypotheses.push_back(f);
  return script_.hypotheses.size();
}

std::size_t ProofBuilder::hyp(const Term& f) { return push(f, HypRef{hyp_index(f)}); }

std::size_t ProofBuilder::axiom(const Term& f, std::string name, std::optional<Direction> d) {
  return push(f, AxiomRef{std::move(name), d});
}

std::size_t ProofBuilder::rule(const Term& f, std::string name, std::vector<std::size_t> premises) {
  return push(f, RuleRef{std::move(name), std::move(premises)});
}

std::size_t ProofBuilder::lemma(const Term& f, std::string id, std::vector<std::size_t> premises) {
  return push(f, LemmaRef{std::move(id), std::move(premises)});
}

std::size_t ProofBuilder::embed(const ProofScript& s) {
  const std::size_t offset = size();
  auto shift = [offset](std::vector<std::size_t> v) {
    for (auto& i : v) i += offset;
    return v;
  };
  for (const auto& line : s.lines) {
    Justification j = line.just;
    if (auto* h = std::get_if<HypRef>(&j)) {
      // out-of-range references are kept so the checker reports them
      if (h->index >= 1 && h->index <= s.hypotheses.size()) h->index = hyp_index(s.hypotheses[h->index - 1]);
    } else if (auto* r = std::get_if<RuleRef>(&j)) {
      r->premises = shift(r->premises);
    } else if (auto* l = std::get_if<LemmaRef>(&j)) {
      l->premises = shift(l->premises);
    }
    push(line.formula, std::move(j));
  }
  return size();
}

}  // namespace sqmv::proofkit
