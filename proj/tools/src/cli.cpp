#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sqmv/error.hpp"
#include "sqmv/models/catalog.hpp"
#include "sqmv/models/classify.hpp"
#include "sqmv/models/finite.hpp"
#include "sqmv/proofkit/checker.hpp"
#include "sqmv/proofkit/registry.hpp"
#include "sqmv/proofkit/transformers.hpp"
#include "sqmv/semantics/audit.hpp"
#include "sqmv/semantics/check.hpp"
#include "sqmv/syntax/abbrev.hpp"
#include "sqmv/syntax/parse.hpp"
#include "sqmv/transform/translate.hpp"

namespace sqmv::cli {

using json = nlohmann::ordered_json;
using syntax::Signature;
using syntax::Term;

std::string fixture_dir() {
  if (const char* env = std::getenv("SQMV_FIXTURES"); env && *env) return env;
  return SQMV_DEFAULT_FIXTURES;
}

namespace {

struct Options {
  std::string model;
  std::string sig = "mv";
  std::string strategy;
  std::uint64_t seed = 0;
  std::int64_t max_den = 120;
  bool json = false;
};

Signature signature_of(const std::string& s) {
  if (s == "mv") return Signature::MV;
  if (s == "w") return Signature::W;
  throw SpecError("--sig must be mv or w, not " + s);
}

std::string sexpr(const Term& t) {
  using syntax::Kind;
  switch (t.kind()) {
    case Kind::Var: return t.name();
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    default: break;
  }
  std::string out = "(" + std::string(syntax::kind_name(t.kind()));
  for (int i = 0; i < t.arity(); ++i) out += " " + sexpr(t.child(i));
  return out + ")";
}

json tree(const Term& t) {
  json j{{"kind", syntax::kind_name(t.kind())}};
  if (t.kind() == syntax::Kind::Var) j["name"] = t.name();
  if (t.arity() > 0) {
    j["args"] = json::array();
    for (int i = 0; i < t.arity(); ++i) j["args"].push_back(tree(t.child(i)));
  }
  return j;
}

semantics::Strategy strategy_for(const Options& o, const models::Model& m) {
  semantics::Strategy s;
  if (!o.strategy.empty())
    s = semantics::Strategy::parse(o.strategy);
  else
    s = m.is_finite() ? semantics::Strategy::exhaustive() : semantics::Strategy::grid();
  s.seed = o.seed;
  s.max_den = o.max_den;
  return s;
}

json report_json(const semantics::CheckReport& r) {
  json j{{"verdict", semantics::verdict_name(r.verdict)},
         {"samples", r.samples},
         {"strategy", r.strategy.describe()},
         {"seed", r.seed},
         {"model", r.model},
         {"truncated", r.truncated}};
  if (r.witness) {
    json w{{"valuation", json::object()}};
    for (const auto& [k, v] : r.witness->shown) w["valuation"][k] = v;
    if (r.witness->rhs) {
      w["lhs"] = r.witness->lhs_text;
      w["rhs"] = r.witness->rhs_text;
    } else {
      w["conclusion"] = r.witness->lhs_text;
    }
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["premises_held"] = r.premises_held;
  return j;
}

int report_exit(const semantics::CheckReport& r) { return r.verdict == semantics::Verdict::Countermodel ? 1 : 0; }

void emit_report(const Options& o, const semantics::CheckReport& r, std::ostream& out) {
  if (o.json)
    out << report_json(r).dump(2) << "\n";
  else
    out << semantics::format_report(r);
}

models::Model need_model(const Options& o) {
  if (o.model.empty()) throw SpecError("--model is required");
  return models::build_model(o.model);
}

proofkit::LemmaRegistry registry_for(const std::string& dir) {
  if (dir == "none") return {};
  return proofkit::load_registry(dir.empty() ? fixture_dir() : dir);
}

json verdict_json(const proofkit::ProofVerdict& v) {
  json lines = json::array();
  for (const auto& l : v.lines)
    lines.push_back({{"line", l.line}, {"ok", l.ok}, {"reason", proofkit::reason_name(l.reason)}, {"detail", l.detail}});
  json j{{"verdict", v.accepted ? "ACCEPT" : "REJECT"}, {"lines", lines}};
  if (v.first_failure)
    j["first_failure"] = {{"line", v.first_failure->line}, {"reason", proofkit::reason_name(v.first_failure->reason)}};
  return j;
}

std::string class_line(const models::ClassFlags& f) {
  std::string out = std::string(syntax::signature_name(f.sig)) + ":";
  out += f.quasi ? " quasi" : " not-quasi";
  if (f.strong) out += " strong";
  if (f.flat) out += " flat";
  if (f.standard) out += " standard";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sqmv: strong quasi-MV* / quasi-Wajsberg* workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--model", o.model, "model name (see catalog syntax)");
  app.add_option("--sig", o.sig, "signature of term arguments: mv | w");
  app.add_option("--strategy", o.strategy, "exhaustive | grid[:d] | random:n");
  app.add_option("--seed", o.seed, "seed for random strategies");
  app.add_option("--max-den", o.max_den, "denominator bound for random elements");
  app.add_flag("--json", o.json, "JSON output");

  std::vector<std::string> terms;
  std::string term, file, registry_dir, set = "strong-quasi", to, prefix = "p";
  std::vector<std::string> premises, family, bindings;

  auto* parse = app.add_subcommand("parse", "parse a term and show its tree");
  parse->add_option("term", term)->required();
  auto* print = app.add_subcommand("print", "parse and print a term canonically");
  auto* expand = print->add_flag("--expand", "expand ^+, ^- into the strong definitions");
  print->add_option("term", term)->required();
  auto* eval = app.add_subcommand("eval", "evaluate a term in a model");
  eval->add_option("term", term)->required();
  eval->add_option("bindings", bindings, "var=element");
  auto* check_eq = app.add_subcommand("check-eq", "check an equation in a model");
  check_eq->add_option("terms", terms)->required()->expected(2);
  auto* check_entail = app.add_subcommand("check-entail", "check premises |= conclusion in a w model");
  check_entail->add_option("--premise,-p", premises);
  check_entail->add_option("conclusion", term)->required();
  auto* find_cm = app.add_subcommand("find-countermodel", "search a family of models for a countermodel");
  find_cm->add_option("--family", family, "model names (default: finite catalog, then square)")->delimiter(';');
  find_cm->add_option("terms", terms)->required()->expected(2);
  auto* translate = app.add_subcommand("translate", "f / g on a term (or on --model)");
  translate->add_option("--to", to, "target signature: w | mv (default: the other one)")
      ->check(CLI::IsMember({"w", "mv"}));
  translate->add_option("term", term);
  auto* classify = app.add_subcommand("classify", "classify a finite model");
  auto* audit = app.add_subcommand("audit-axioms", "check an equation set on --model");
  audit->add_option("--set", set, "quasi | standard | strong | flat | strong-quasi");
  auto* check_proof = app.add_subcommand("check-proof", "check a proof script");
  check_proof->add_option("file", file)->required();
  check_proof->add_option("--registry", registry_dir, "lemma directory, or 'none'");
  auto* lift = app.add_subcommand("lift-proof", "lift an L* script to sqL*");
  lift->add_option("file", file)->required();
  lift->add_option("--prefix", prefix, "variable of the (x->x)-> prefix");
  auto* dereg = app.add_subcommand("deregularize", "drop the (r->r)-> prefix from a regular conclusion");
  dereg->add_option("file", file)->required();
  dereg->add_option("--registry", registry_dir, "lemma directory, or 'none'");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Signature sig = signature_of(o.sig);
    if (parse->parsed()) {
      Term t = syntax::parse(term, sig);
      if (o.json)
        out << json{{"term", syntax::print(t)}, {"tree", tree(t)}}.dump(2) << "\n";
      else
        out << sexpr(t) << "\n";
      return 0;
    }
    if (print->parsed()) {
      Term t = syntax::parse(term, sig);
      if (*expand) t = syntax::expand_abbreviations(t, sig);
      out << syntax::print(t) << "\n";
      return 0;
    }
    if (eval->parsed()) {
      auto m = need_model(o);
      Term t = syntax::parse(term, m.signature());
      semantics::Valuation v;
      for (const auto& b : bindings) {
        auto eq = b.find('=');
        if (eq == std::string::npos) throw SpecError("binding '" + b + "' is not var=element");
        v[b.substr(0, eq)] = m.parse_element(b.substr(eq + 1));
      }
      std::string value = m.format(semantics::evaluate(t, m, v));
      if (o.json)
        out << json{{"model", m.name()}, {"term", syntax::print(t)}, {"value", value}}.dump(2) << "\n";
      else
        out << value << "\n";
      return 0;
    }
    if (check_eq->parsed()) {
      auto m = need_model(o);
      Term l = syntax::parse(terms[0], m.signature()), r = syntax::parse(terms[1], m.signature());
      auto rep = semantics::check_equation(l, r, m, strategy_for(o, m));
      emit_report(o, rep, out);
      return report_exit(rep);
    }
    if (check_entail->parsed()) {
      auto m = need_model(o);
      std::vector<Term> ps;
      for (const auto& p : premises) ps.push_back(syntax::parse(p, m.signature()));
      auto rep = semantics::check_entailment(ps, syntax::parse(term, m.signature()), m, strategy_for(o, m));
      emit_report(o, rep, out);
      return report_exit(rep);
    }
    if (find_cm->parsed()) {
      if (family.empty()) {
        family = models::finite_catalog();
        family.push_back("square");
      }
      Term l = syntax::parse(terms[0], sig), r = syntax::parse(terms[1], sig);
      semantics::Strategy st = o.strategy.empty() ? semantics::Strategy::grid() : semantics::Strategy::parse(o.strategy);
      st.seed = o.seed;
      st.max_den = o.max_den;
      auto rep = semantics::search_countermodel(l, r, family, st);
      emit_report(o, rep, out);
      return report_exit(rep);
    }
    if (translate->parsed()) {
      if (!o.model.empty()) {
        auto m = models::build_model(o.model);
        if (!to.empty() && (to == "mv") == (m.signature() == Signature::MV))
          throw SpecError(o.model + " is already in the " + to + " signature");
        auto t = m.signature() == Signature::MV ? transform::mv_to_w_model(m) : transform::w_to_mv_model(m);
        out << "model: " << t.name() << "\n";
        if (t.is_finite()) out << models::export_tables(t);
        return 0;
      }
      if (term.empty()) throw SpecError("translate needs a term or --model");
      if (!to.empty()) sig = to == "w" ? Signature::MV : Signature::W;
      Term t = syntax::parse(term, sig);
      Term u = sig == Signature::MV ? transform::mv_to_w_term(t) : transform::w_to_mv_term(t);
      out << syntax::print(u) << "\n";
      return 0;
    }
    if (classify->parsed()) {
      auto m = need_model(o);
      auto c = models::classify(m);
      auto failures = [](const std::vector<models::AxiomResult>& rs) {
        std::vector<std::string> out;
        for (const auto& r : rs)
          if (!r.holds) out.push_back(r.name);
        return out;
      };
      if (o.json) {
        out << json{{"model", m.name()},
                    {"size", m.size()},
                    {"quasi", c.flags.quasi},
                    {"strong", c.flags.strong},
                    {"flat", c.flags.flat},
                    {"standard", c.flags.standard},
                    {"failing_quasi", failures(c.quasi)},
                    {"failing_standard", failures(c.standard)},
                    {"failing_strong", failures(c.strong)}}
                   .dump(2)
            << "\n";
      } else {
        out << m.name() << " (" << m.size() << " elements) " << class_line(c.flags) << "\n";
        for (const auto* group : {&c.quasi, &c.standard, &c.strong, &c.flat})
          for (const auto& r : *group)
            if (!r.holds) {
              out << "  fails " << r.name;
              if (!r.vars.empty()) out << " at";
              for (std::size_t i = 0; i < r.vars.size(); ++i)
                out << " " << r.vars[i] << "=" << m.format(m.element(r.witness[i]));
              out << "\n";
            }
      }
      return 0;
    }
    if (audit->parsed()) {
      auto m = need_model(o);
      auto st = o.strategy.empty() && !m.is_finite() ? semantics::Strategy::random(10000) : strategy_for(o, m);
      st.seed = o.seed;
      st.max_den = o.max_den;
      auto entries = semantics::audit(m, semantics::equation_set(set, m.signature()), st);
      if (o.json) {
        json j = json::array();
        for (const auto& e : entries) j.push_back({{"name", e.name}, {"report", report_json(e.report)}});
        out << json{{"model", m.name()}, {"set", set}, {"passed", semantics::audit_passed(entries)}, {"axioms", j}}.dump(2)
            << "\n";
      } else {
        for (const auto& e : entries) {
          out << e.name << ": " << semantics::verdict_name(e.report.verdict) << " (" << e.report.samples << ")\n";
          if (e.report.witness) {
            out << "  witness:";
            for (const auto& [k, v] : e.report.witness->shown) out << " " << k << "=" << v;
            out << "\n";
          }
        }
        out << (semantics::audit_passed(entries) ? "PASS" : "FAIL") << "\n";
      }
      return semantics::audit_passed(entries) ? 0 : 1;
    }
    if (check_proof->parsed()) {
      auto s = proofkit::load_script(file);
      auto v = proofkit::check_proof(s, registry_for(registry_dir));
      if (o.json)
        out << verdict_json(v).dump(2) << "\n";
      else
        out << proofkit::format_verdict(v);
      return v.accepted ? 0 : 1;
    }
    if (lift->parsed()) {
      out << proofkit::format_script(proofkit::lift_lstar_proof(proofkit::load_script(file), prefix));
      return 0;
    }
    if (dereg->parsed()) {
      auto s = proofkit::load_script(file);
      auto reg = registry_for(registry_dir);
      auto v = proofkit::check_proof(s, reg);
      if (!v.accepted) throw SourceProofInvalid("input script is rejected at line " + std::to_string(v.first_failure->line));
      out << proofkit::format_script(proofkit::deregularize_proof(s));
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace sqmv::cli
