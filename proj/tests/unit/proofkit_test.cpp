#include <gtest/gtest.h>

#include <filesystem>

#include "mutants.hpp"
#include "sqmv/error.hpp"
#include "sqmv/proofkit/axioms.hpp"
#include "sqmv/proofkit/builder.hpp"
#include "sqmv/proofkit/checker.hpp"
#include "sqmv/proofkit/registry.hpp"
#include "sqmv/proofkit/transformers.hpp"
#include "sqmv/syntax/parse.hpp"

using namespace sqmv;
using namespace sqmv::proofkit;
using syntax::Signature;

namespace {

const std::string kFixtures = SQMV_FIXTURE_DIR;

Term w(const char* s) { return syntax::parse(s, Signature::W); }

ProofScript fixture(const std::string& name) { return load_script(kFixtures + "/" + name); }

// Registry holding every lemma listed before `stop` in the manifest.
LemmaRegistry registry_until(const std::string& stop) {
  LemmaRegistry reg;
  for (const auto& [id, file] : read_manifest(kFixtures)) {
    if (id == stop) break;
    reg = register_lemma(reg, derive_rule(id, load_script(file)));
  }
  return reg;
}

const LemmaRegistry& full_registry() {
  static const LemmaRegistry reg = load_registry(kFixtures);
  return reg;
}

bool uses_lemma(const ProofScript& s, const std::string& id) {
  for (const auto& l : s.lines)
    if (auto* j = std::get_if<LemmaRef>(&l.just); j && j->id == id) return true;
  return false;
}

bool uses_rule(const ProofScript& s, const std::string& name) {
  for (const auto& l : s.lines)
    if (auto* j = std::get_if<RuleRef>(&l.just); j && j->name == name) return true;
  return false;
}

std::vector<std::string> rule_names(const ProofScript& s) {
  std::vector<std::string> out;
  for (const auto& l : s.lines) {
    if (auto* a = std::get_if<AxiomRef>(&l.just)) out.push_back(a->name);
    if (auto* r = std::get_if<RuleRef>(&l.just)) out.push_back(r->name);
    if (auto* h = std::get_if<HypRef>(&l.just)) out.push_back("HYP");
    if (auto* m = std::get_if<LemmaRef>(&l.just)) out.push_back("LEM " + m->id);
  }
  return out;
}

ProofVerdict check_text(const std::string& text, const LemmaRegistry& reg = {}) {
  return check_proof(parse_script(text), reg);
}

Biconditional double_negation(const char* x) {
  ProofBuilder lr(System::SqL), rl(System::SqL);
  Term t = w(x);
  lr.lemma(Term::impl(Term::neg(Term::neg(t)), t), "8b");
  rl.lemma(Term::impl(t, Term::neg(Term::neg(t))), "8a");
  return {lr.script(), rl.script()};
}

}  // namespace

TEST(Axioms, InstantiateExamples) {
  EXPECT_EQ(instantiate_axiom(System::SqL, "Q10", {{"p", w("q -> q")}}), (std::vector<Term>{w("(q -> q) -> 1")}));
  EXPECT_EQ(instantiate_axiom(System::SqL, "Q3", {{"p", w("x")}, {"q", w("y")}}),
            (std::vector<Term>{w("x -> ((y -> y) -> x)"), w("((y -> y) -> x) -> x")}));
  EXPECT_EQ(instantiate_axiom(System::SqL, "Q5", {{"p", w("x")}, {"q", w("y")}}),
            (std::vector<Term>{w("~(x -> y) -> (y -> x)"), w("(y -> x) -> ~(x -> y)")}));
  EXPECT_EQ(instantiate_axiom(System::L, "P4", {{"p", w("a")}}), (std::vector<Term>{w("a -> 1")}));
  EXPECT_THROW(instantiate_axiom(System::SqL, "Q11", {}), UnknownAxiom);
  EXPECT_THROW(instantiate_axiom(System::SqL, "P4", {{"p", w("a")}}), UnknownAxiom);
  EXPECT_THROW(instantiate_axiom(System::SqL, "Q3", {{"p", w("x")}}), MissingBinding);
}

TEST(Axioms, AbbreviationsExpanded) {
  auto q4 = instantiate_axiom(System::SqL, "Q4", {{"p", w("a")}, {"q", w("b")}});
  ASSERT_EQ(q4.size(), 2u);
  for (const auto& f : q4) EXPECT_FALSE(syntax::has_abbreviations(f));
  EXPECT_EQ(q4[0], core(w("(a -> b) -> ((b^+ -> a^-) -> (a^+ -> b^-))")));
}

TEST(Axioms, Tables) {
  EXPECT_EQ(axiom_table(System::SqL).size(), 10u);
  EXPECT_EQ(axiom_table(System::L).size(), 10u);
  for (const char* r : {"qMP", "Reg", "AReg1", "AReg2", "AReg3", "AReg4", "Inv1", "Inv2", "Flat", "R2'", "R3'"})
    EXPECT_NE(find_rule(System::SqL, r), nullptr) << r;
  for (const char* r : {"R1", "R2", "R3"}) EXPECT_NE(find_rule(System::L, r), nullptr) << r;
  EXPECT_EQ(find_rule(System::L, "qMP"), nullptr);
}

TEST(Checker, ReflexivityFixture) {
  auto v = check_proof(fixture("prop4_3_05.sqlp"), registry_until("5"));
  EXPECT_TRUE(v.accepted) << format_verdict(v);
  EXPECT_EQ(v.lines[0].detail, "Q3 LR");
  EXPECT_EQ(v.lines[1].detail, "Q3 RL");
}

TEST(Checker, Q2MutationRejectedAtLine2) {
  auto s = fixture("prop4_3_05.sqlp");
  s.lines[1].just = AxiomRef{"Q2", std::nullopt};
  auto v = check_proof(s, registry_until("5"));
  ASSERT_FALSE(v.accepted);
  EXPECT_EQ(v.first_failure->line, 2u);
  EXPECT_EQ(v.first_failure->reason, Reason::NoMatchingAxiomInstance);
  EXPECT_NE(format_verdict(v).find("REJECT at line 2: NoMatchingAxiomInstance"), std::string::npos);
}

TEST(Checker, LStarOneLiner) {
  auto v = check_text("system: L*\n1. p -> 1 ; AX P4\n");
  EXPECT_TRUE(v.accepted);
}

TEST(Checker, WrongDirectionRejected) {
  EXPECT_TRUE(check_text("system: sqL*\n1. x -> ((y -> y) -> x) ; AX Q3 LR\n").accepted);
  auto v = check_text("system: sqL*\n1. x -> ((y -> y) -> x) ; AX Q3 RL\n");
  EXPECT_EQ(v.first_failure->reason, Reason::NoMatchingAxiomInstance);
  EXPECT_EQ(check_text("system: sqL*\n1. q -> 1 ; AX Q10 LR\n").first_failure->reason,
            Reason::NoMatchingAxiomInstance);
}

TEST(Checker, Reasons) {
  auto reason = [](const std::string& body, const LemmaRegistry& reg = {}) {
    auto v = check_text(body, reg);
    EXPECT_FALSE(v.accepted) << body;
    return v.first_failure ? v.first_failure->reason : Reason::None;
  };
  EXPECT_EQ(reason("system: sqL*\n1. p -> 1 ; AX Q99\n"), Reason::UnknownAxiom);
  EXPECT_EQ(reason("system: sqL*\n1. p -> 1 ; AX P4\n"), Reason::UnknownAxiom);
  EXPECT_EQ(reason("system: sqL*\nhyp: p\n1. p ; HYP 2\n"), Reason::BadHypothesisIndex);
  EXPECT_EQ(reason("system: sqL*\nhyp: p\n1. q ; HYP 1\n"), Reason::HypothesisMismatch);
  EXPECT_EQ(reason("system: sqL*\nhyp: p\n1. p ; HYP 1\n2. p ; RULE Cut 1\n"), Reason::UnknownRule);
  EXPECT_EQ(reason("system: sqL*\nhyp: p\n1. p ; HYP 1\n2. (r -> r) -> p ; RULE Reg 1,1\n"),
            Reason::WrongPremiseCount);
  EXPECT_EQ(reason("system: sqL*\nhyp: p\n1. p ; HYP 1\n2. (r -> r) -> p ; RULE Reg 2\n"),
            Reason::PremiseOutOfRange);
  EXPECT_EQ(reason("system: sqL*\nhyp: p\n1. p ; HYP 1\n2. (r -> r) -> q ; RULE Reg 1\n"), Reason::RuleMismatch);
  EXPECT_EQ(reason("system: sqL*\n1. p -> p ; LEM 5\n"), Reason::UnknownLemma);
  EXPECT_EQ(reason("system: sqL*\n1. p -> q ; LEM 5\n", full_registry()), Reason::LemmaMismatch);
  EXPECT_EQ(reason("system: L*\n1. p -> p ; LEM 5\n", full_registry()), Reason::LemmaNotAllowed);
}

TEST(Checker, SharedPrefixMustAgree) {
  const char* ok =
      "system: sqL*\nhyp: (r -> r) -> a\nhyp: (r -> r) -> (a -> b)\n"
      "1. (r -> r) -> a ; HYP 1\n2. (r -> r) -> (a -> b) ; HYP 2\n3. (r -> r) -> b ; RULE qMP 1,2\n";
  EXPECT_TRUE(check_text(ok).accepted);
  const char* mixed =
      "system: sqL*\nhyp: (r -> r) -> a\nhyp: (s -> s) -> (a -> b)\n"
      "1. (r -> r) -> a ; HYP 1\n2. (s -> s) -> (a -> b) ; HYP 2\n3. (r -> r) -> b ; RULE qMP 1,2\n";
  EXPECT_EQ(check_text(mixed).first_failure->reason, Reason::RuleMismatch);
}

TEST(Checker, AbbreviationsInScripts) {
  EXPECT_TRUE(check_text("system: sqL*\nhyp: (q -> q) -> p\n1. (q -> q) -> p ; HYP 1\n2. p^- ; RULE R3' 1\n").accepted);
  EXPECT_TRUE(
      check_text("system: sqL*\nhyp: (q -> q) -> p\n1. (q -> q) -> p ; HYP 1\n2. (p -> ~1) -> ~1 ; RULE R3' 1\n")
          .accepted);
}

TEST(Checker, FlatRule) {
  EXPECT_TRUE(check_text("system: sqL*\nhyp: p\nhyp: ~1\n1. p ; HYP 1\n2. ~1 ; HYP 2\n3. ~p ; RULE Flat 1,2\n")
                  .accepted);
}

TEST(Script, FormatErrors) {
  EXPECT_THROW(parse_script("1. p ; AX Q10\n"), ScriptFormatError);            // no header
  EXPECT_THROW(parse_script("system: K\n1. p ; AX Q10\n"), ScriptFormatError);  // unknown system
  EXPECT_THROW(parse_script("system: sqL*\n2. p -> 1 ; AX Q10\n"), ScriptFormatError);
  EXPECT_THROW(parse_script("system: sqL*\n1. p -> 1 ; MAGIC\n"), ScriptFormatError);
  EXPECT_THROW(parse_script("system: sqL*\n1. p (+) 1 ; AX Q10\n"), SignatureError);
  EXPECT_THROW(load_script("/nonexistent/file.sqlp"), ScriptFormatError);
}

TEST(Script, FormatRoundTrip) {
  for (const auto& [id, file] : read_manifest(kFixtures)) {
    auto s = load_script(file);
    auto again = parse_script(format_script(s));
    EXPECT_EQ(format_script(again), format_script(s)) << file;
    EXPECT_EQ(again.lines.size(), s.lines.size());
  }
}

TEST(Registry, AllFixturesInOrder) {
  const auto& reg = full_registry();
  EXPECT_EQ(reg.rules().size(), 18u);
  for (const auto& r : reg.rules()) EXPECT_TRUE(check_proof(r.certificate, reg).accepted) << r.id;
}

TEST(Registry, TransitivityRegisters) {
  auto reg = registry_until("3");
  auto rule = derive_rule("3", fixture("prop4_3_03.sqlp"));
  EXPECT_EQ(rule.certificate.lines.size(), 8u);
  EXPECT_NO_THROW(register_lemma(reg, rule));
}

TEST(Registry, OrderMatters) {
  auto before3 = registry_until("3");
  EXPECT_THROW(register_lemma(before3, derive_rule("5", fixture("prop4_3_05.sqlp"))), CertificationFailed);
  auto reg = register_lemma(before3, derive_rule("3", fixture("prop4_3_03.sqlp")));
  EXPECT_NO_THROW(register_lemma(reg, derive_rule("5", fixture("prop4_3_05.sqlp"))));
}

TEST(Registry, DoubleNegationAfterItsDependencies) {
  auto reg = registry_until("8a");
  EXPECT_TRUE(reg.find("1") && reg.find("3") && reg.find("6a"));
  reg = register_lemma(reg, derive_rule("8a", fixture("prop4_3_08a.sqlp")));
  EXPECT_NO_THROW(register_lemma(reg, derive_rule("8b", fixture("prop4_3_08b.sqlp"))));
}

TEST(Registry, Refusals) {
  auto reg = registry_until("5");
  EXPECT_THROW(register_lemma(reg, derive_rule("3", fixture("prop4_3_03.sqlp"))), CertificationFailed);
  auto lstar = parse_script("system: L*\n1. p -> 1 ; AX P4\n");
  EXPECT_THROW(register_lemma(reg, derive_rule("x", lstar)), CertificationFailed);
  auto bogus = derive_rule("y", fixture("prop4_3_05.sqlp"));
  bogus.conclusion = w("q -> q");
  EXPECT_THROW(register_lemma(reg, bogus), CertificationFailed);
  auto broken = fixture("prop4_3_05.sqlp");
  broken.lines[0].just = AxiomRef{"Q1", std::nullopt};
  EXPECT_THROW(register_lemma(reg, derive_rule("z", broken)), CertificationFailed);
}

TEST(Registry, LemmaCitationMatchesSchemas) {
  const auto& reg = full_registry();
  EXPECT_TRUE(check_text("system: sqL*\nhyp: a -> b\n1. a -> b ; HYP 1\n2. ~b -> ~a ; LEM 1 1\n", reg).accepted);
  EXPECT_TRUE(check_text("system: sqL*\n1. (x -> y) -> (x -> y) ; LEM 5\n", reg).accepted);
  EXPECT_TRUE(check_text("system: sqL*\n1. (a \\/ b) -> (b \\/ a) ; LEM 11\n", reg).accepted);
  auto wrong_count = check_text("system: sqL*\nhyp: a -> b\n1. a -> b ; HYP 1\n2. ~b -> ~a ; LEM 1\n", reg);
  EXPECT_FALSE(wrong_count.accepted);
}

TEST(Mutation, ReflexivityMutantsRejected) {
  auto reg = registry_until("5");
  auto all = oracle::mutants(fixture("prop4_3_05.sqlp"), reg);
  EXPECT_GT(all.size(), 20u);
  for (const auto& m : all) EXPECT_FALSE(check_proof(m.script, reg).accepted) << m.label;
}

TEST(Replacement, UnderNegationUsesLemma1) {
  auto dn = double_negation("a");
  auto r = replacement_proof(w("~~~a"), {0}, dn);
  EXPECT_EQ(r.lr.conclusion(), w("~~~a -> ~a"));
  EXPECT_EQ(r.rl.conclusion(), w("~a -> ~~~a"));
  EXPECT_TRUE(uses_lemma(r.lr, "1"));
  EXPECT_TRUE(check_proof(r.lr, full_registry()).accepted);
  EXPECT_TRUE(check_proof(r.rl, full_registry()).accepted);
}

TEST(Replacement, LeftOfImplicationUsesLemmas5And2) {
  auto r = replacement_proof(w("~~a -> b"), {0}, double_negation("a"));
  EXPECT_EQ(r.lr.conclusion(), w("(~~a -> b) -> (a -> b)"));
  EXPECT_TRUE(uses_lemma(r.lr, "5"));
  EXPECT_TRUE(uses_lemma(r.lr, "2"));
  EXPECT_TRUE(check_proof(r.lr, full_registry()).accepted);
  EXPECT_TRUE(check_proof(r.rl, full_registry()).accepted);
}

TEST(Replacement, IdentityPath) {
  auto dn = double_negation("a");
  auto r = replacement_proof(w("~~a"), {}, dn);
  EXPECT_EQ(format_script(r.lr), format_script(dn.lr));
  EXPECT_EQ(format_script(r.rl), format_script(dn.rl));
}

TEST(Replacement, LinearInPathDepth) {
  auto dn = double_negation("a");
  Term p = w("~~a");
  syntax::Path path;
  std::vector<std::size_t> sizes;
  for (int depth = 0; depth < 6; ++depth) {
    p = depth % 2 ? Term::neg(p) : Term::impl(w("c"), p);
    path.insert(path.begin(), depth % 2 ? 0 : 1);
    auto r = replacement_proof(p, path, dn);
    ASSERT_TRUE(check_proof(r.lr, full_registry()).accepted) << depth;
    ASSERT_TRUE(check_proof(r.rl, full_registry()).accepted) << depth;
    sizes.push_back(r.lr.lines.size());
  }
  for (std::size_t i = 2; i < sizes.size(); i += 2) EXPECT_EQ(sizes[i] - sizes[i - 2], sizes[2] - sizes[0]);
}

TEST(Replacement, Errors) {
  auto dn = double_negation("a");
  EXPECT_THROW(replacement_proof(w("~~~a"), {0, 0, 0}, dn), PathMismatch);
  EXPECT_THROW(replacement_proof(w("~b"), {0}, dn), PathMismatch);
  Biconditional odd{parse_script("system: sqL*\nhyp: a\n1. a ; HYP 1\n"), dn.rl};
  EXPECT_THROW(replacement_proof(w("~~~a"), {0}, odd), SourceProofInvalid);
}

TEST(Replacement, ReplaceAll) {
  auto r = replace_all(w("~~a -> (b -> ~~a)"), double_negation("a"));
  EXPECT_EQ(r.lr.conclusion(), w("(~~a -> (b -> ~~a)) -> (a -> (b -> a))"));
  EXPECT_TRUE(check_proof(r.lr, full_registry()).accepted);
  EXPECT_TRUE(check_proof(r.rl, full_registry()).accepted);
  auto none = replace_all(w("b -> c"), double_negation("a"));
  EXPECT_EQ(none.lr.conclusion(), w("(b -> c) -> (b -> c)"));
  EXPECT_TRUE(check_proof(none.lr, full_registry()).accepted);
}

TEST(Lift, AxiomOneLiner) {
  auto out = lift_lstar_proof(fixture("lstar/ax_p04.lp"));
  EXPECT_EQ(out.system, System::SqL);
  ASSERT_EQ(out.lines.size(), 2u);
  EXPECT_EQ(rule_names(out), (std::vector<std::string>{"Q10", "Reg"}));
  EXPECT_TRUE(check_proof(out).accepted);
}

TEST(Lift, ModusPonensStep) {
  auto out = lift_lstar_proof(fixture("lstar/r1_hyp.lp"));
  EXPECT_EQ(rule_names(out), (std::vector<std::string>{"HYP", "Reg", "HYP", "Reg", "qMP"}));
  EXPECT_EQ(out.conclusion(), w("(p -> p) -> b"));
  EXPECT_TRUE(check_proof(out).accepted);
}

TEST(Lift, R3Step) {
  auto out = lift_lstar_proof(fixture("lstar/r3_hyp.lp"));
  auto names = rule_names(out);
  ASSERT_GE(names.size(), 3u);
  EXPECT_EQ(std::vector<std::string>(names.end() - 2, names.end()), (std::vector<std::string>{"R3'", "Reg"}));
  EXPECT_TRUE(check_proof(out).accepted);
}

TEST(Lift, Corpus) {
  int n = 0;
  for (const auto& e : std::filesystem::directory_iterator(kFixtures + "/lstar")) {
    auto s = load_script(e.path().string());
    ASSERT_TRUE(check_proof(s).accepted) << e.path();
    auto out = lift_lstar_proof(s, "p");
    EXPECT_TRUE(check_proof(out).accepted) << e.path();
    EXPECT_EQ(out.conclusion(), Term::impl(w("p -> p"), s.conclusion())) << e.path();
    EXPECT_EQ(out.hypotheses, s.hypotheses);
    ++n;
  }
  EXPECT_GE(n, 20);
}

TEST(Lift, Refusals) {
  EXPECT_THROW(lift_lstar_proof(fixture("prop4_3_05.sqlp")), SourceProofInvalid);
  EXPECT_THROW(lift_lstar_proof(parse_script("system: L*\n1. p ; AX P4\n")), SourceProofInvalid);
}

TEST(Deregularize, Implication) {
  auto s = parse_script("system: sqL*\nhyp: (q -> q) -> (r -> t)\n1. (q -> q) -> (r -> t) ; HYP 1\n");
  auto out = deregularize_proof(s);
  ASSERT_EQ(out.lines.size(), 2u);
  EXPECT_EQ(rule_names(out).back(), "AReg1");
  EXPECT_EQ(out.conclusion(), w("r -> t"));
  EXPECT_TRUE(check_proof(out).accepted);
}

TEST(Deregularize, One) {
  auto s = parse_script("system: sqL*\n1. (q -> q) -> 1 ; AX Q10\n");
  auto out = deregularize_proof(s);
  ASSERT_EQ(out.lines.size(), 2u);
  EXPECT_EQ(rule_names(out).back(), "AReg4");
  EXPECT_TRUE(check_proof(out).accepted);
}

TEST(Deregularize, TripleNegatedOne) {
  auto s = parse_script("system: sqL*\nhyp: (q -> q) -> ~~~1\n1. (q -> q) -> ~~~1 ; HYP 1\n");
  auto out = deregularize_proof(s);
  EXPECT_EQ(out.conclusion(), w("~~~1"));
  EXPECT_TRUE(uses_lemma(out, "8b"));
  EXPECT_TRUE(uses_rule(out, "qMP"));
  EXPECT_TRUE(uses_rule(out, "AReg3"));
  EXPECT_TRUE(uses_rule(out, "Inv1"));
  EXPECT_TRUE(check_proof(out, full_registry()).accepted) << format_verdict(check_proof(out, full_registry()));
}

TEST(Deregularize, NegatedImplications) {
  for (const char* q : {"~(a -> b)", "~~(a -> b)", "~~~~(a -> b)", "~1", "~~1"}) {
    Term qt = w(q);
    auto out = deregularize_proof(parse_script(std::string("system: sqL*\nhyp: (q -> q) -> ") + q +
                                               "\n1. (q -> q) -> " + q + " ; HYP 1\n"));
    EXPECT_EQ(out.conclusion(), qt) << q;
    EXPECT_TRUE(check_proof(out, full_registry()).accepted) << q;
  }
}

TEST(Deregularize, Refusals) {
  EXPECT_THROW(deregularize_proof(parse_script("system: sqL*\nhyp: (q -> q) -> ~~a\n1. (q -> q) -> ~~a ; HYP 1\n")),
               NotRegular);
  EXPECT_THROW(deregularize_proof(parse_script("system: sqL*\nhyp: a -> b\n1. a -> b ; HYP 1\n")), SourceProofInvalid);
}

TEST(Deregularize, AfterLift) {
  for (const auto& e : std::filesystem::directory_iterator(kFixtures + "/lstar")) {
    auto s = load_script(e.path().string());
    auto lifted = lift_lstar_proof(s);
    if (!syntax::is_regular(s.conclusion())) {
      EXPECT_THROW(deregularize_proof(lifted), NotRegular) << e.path();
      continue;
    }
    auto out = deregularize_proof(lifted);
    // Lifting works on expanded formulas, so compare up to abbreviations.
    EXPECT_EQ(core(out.conclusion()), core(s.conclusion())) << e.path();
    EXPECT_TRUE(check_proof(out, full_registry()).accepted) << e.path();
  }
}

TEST(Builder, EmbedRemapsHypotheses) {
  ProofBuilder b(System::SqL, {w("x")});
  auto inner = parse_script("system: sqL*\nhyp: y\nhyp: x\n1. x ; HYP 2\n2. y ; HYP 1\n");
  auto last = b.embed(inner);
  EXPECT_EQ(last, 2u);
  EXPECT_EQ(b.script().hypotheses, (std::vector<Term>{w("x"), w("y")}));
  EXPECT_TRUE(check_proof(b.script()).accepted);
}
