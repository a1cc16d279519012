#include "sqmv/proofkit/checker.hpp"

#include "sqmv/error.hpp"
#include "sqmv/proofkit/axioms.hpp"
#include "sqmv/syntax/parse.hpp"
#include "sqmv/syntax/schema.hpp"

namespace sqmv::proofkit {

std::string reason_name(Reason r) {
  switch (r) {
    case Reason::None: return "None";
    case Reason::UnknownAxiom: return "UnknownAxiom";
    case Reason::NoMatchingAxiomInstance: return "NoMatchingAxiomInstance";
    case Reason::BadHypothesisIndex: return "BadHypothesisIndex";
    case Reason::HypothesisMismatch: return "HypothesisMismatch";
    case Reason::UnknownRule: return "UnknownRule";
    case Reason::WrongPremiseCount: return "WrongPremiseCount";
    case Reason::PremiseOutOfRange: return "PremiseOutOfRange";
    case Reason::RuleMismatch: return "RuleMismatch";
    case Reason::UnknownLemma: return "UnknownLemma";
    case Reason::LemmaMismatch: return "LemmaMismatch";
    case Reason::LemmaNotAllowed: return "LemmaNotAllowed";
  }
  return "?";
}

namespace {

struct Checker {
  const ProofScript& s;
  const LemmaRegistry& reg;
  std::vector<Term> cores;  // core form of each line

  LineReport fail(std::size_t i, Reason r, std::string why) { return {i, false, r, std::move(why)}; }

  // Simultaneous match of premise patterns against cited lines, then of the
  // conclusion pattern against line i.
  bool match_all(const std::vector<Term>& premises, const Term& conclusion, const std::vector<std::size_t>& cited,
                 std::size_t i) {
    syntax::Assignment sigma;
    for (std::size_t k = 0; k < premises.size(); ++k)
      if (!syntax::match_into(premises[k], cores[cited[k] - 1], sigma)) return false;
    return syntax::match_into(conclusion, cores[i - 1], sigma);
  }

  std::optional<LineReport> check_cited(std::size_t i, const std::vector<std::size_t>& cited, std::size_t want,
                                        const std::string& what) {
    if (cited.size() != want)
      return fail(i, Reason::WrongPremiseCount,
                  what + " takes " + std::to_string(want) + " premise(s), got " + std::to_string(cited.size()));
    for (std::size_t p : cited)
      if (p < 1 || p >= i)
        return fail(i, Reason::PremiseOutOfRange, "premise " + std::to_string(p) + " is not an earlier line");
    return std::nullopt;
  }

  LineReport line(std::size_t i) {
    const Term& f = cores[i - 1];
    const Justification& j = s.lines[i - 1].just;
    if (const auto* a = std::get_if<AxiomRef>(&j)) {
      const AxiomSchema* ax = nullptr;
      try {
        ax = &find_axiom(s.system, a->name);
      } catch (const UnknownAxiom& e) {
        return fail(i, Reason::UnknownAxiom, e.what());
      }
      for (std::size_t k = 0; k < ax->forms.size(); ++k) {
        Direction d = ax->forms.size() == 1 ? Direction::NA : k == 0 ? Direction::LR : Direction::RL;
        if (a->direction && *a->direction != d) continue;
        if (syntax::match_schema({ax->forms[k], syntax::Signature::W}, f))
          return {i, true, Reason::None, a->name + " " + direction_name(d)};
      }
      return fail(i, Reason::NoMatchingAxiomInstance, "not an instance of " + a->name);
    }
    if (const auto* h = std::get_if<HypRef>(&j)) {
      if (h->index < 1 || h->index > s.hypotheses.size())
        return fail(i, Reason::BadHypothesisIndex, "no hypothesis " + std::to_string(h->index));
      if (core(s.hypotheses[h->index - 1]) != f)
        return fail(i, Reason::HypothesisMismatch, "differs from hypothesis " + std::to_string(h->index));
      return {i, true, Reason::None, "hyp " + std::to_string(h->index)};
    }
    if (const auto* r = std::get_if<RuleRef>(&j)) {
      const RuleSchema* rs = find_rule(s.system, r->name);
      if (!rs) return fail(i, Reason::UnknownRule, "no rule " + r->name + " in " + system_name(s.system));
      if (auto bad = check_cited(i, r->premises, rs->premises.size(), r->name)) return *bad;
      if (!match_all(rs->premises, rs->conclusion, r->premises, i))
        return fail(i, Reason::RuleMismatch, "does not follow by " + r->name);
      return {i, true, Reason::None, r->name};
    }
    const auto& l = std::get<LemmaRef>(j);
    if (s.system != System::SqL) return fail(i, Reason::LemmaNotAllowed, "lemmas are sqL* derived rules");
    const DerivedRule* dr = reg.find(l.id);
    if (!dr) return fail(i, Reason::UnknownLemma, "no registered lemma " + l.id);
    if (auto bad = check_cited(i, l.premises, dr->hypotheses.size(), "lemma " + l.id)) return *bad;
    std::vector<Term> hyps;
    for (const auto& h : dr->hypotheses) hyps.push_back(core(h));
    if (!match_all(hyps, core(dr->conclusion), l.premises, i))
      return fail(i, Reason::LemmaMismatch, "does not follow by lemma " + l.id);
    return {i, true, Reason::None, "lemma " + l.id};
  }
};

}  // namespace

ProofVerdict check_proof(const ProofScript& s, const LemmaRegistry& registry) {
  Checker c{s, registry, {}};
  for (const auto& l : s.lines) {
    syntax::require_signature(l.formula, syntax::Signature::W);
    c.cores.push_back(core(l.formula));
  }
  ProofVerdict v;
  v.accepted = !s.lines.empty();
  for (std::size_t i = 1; i <= s.lines.size(); ++i) {
    LineReport r = c.line(i);
    if (!r.ok && !v.first_failure) v.first_failure = r;
    v.accepted = v.accepted && r.ok;
    v.lines.push_back(std::move(r));
  }
  return v;
}

std::string format_verdict(const ProofVerdict& v) {
  std::string out;
  for (const auto& l : v.lines)
    out += std::to_string(l.line) + ": " + (l.ok ? "ok   " : "FAIL ") + l.detail +
           (l.ok ? "" : " [" + reason_name(l.reason) + "]") + "\n";
  if (v.accepted) {
    out += "ACCEPT\n";
  } else if (v.first_failure) {
    out += "REJECT at line " + std::to_string(v.first_failure->line) + ": " + reason_name(v.first_failure->reason) + "\n";
  } else {
    out += "REJECT: empty proof\n";
  }
  return out;
}

}  // namespace sqmv::proofkit
