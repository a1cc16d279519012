#include "sqmv/semantics/check.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <span>
#include <stdexcept>
#include <tuple>

#include "sqmv/error.hpp"
#include "sqmv/models/catalog.hpp"
#include "sqmv/transform/translate.hpp"

namespace sqmv::semantics {

using models::Carrier;
using models::Designation;
using syntax::Kind;
using syntax::Signature;

Strategy Strategy::parse(const std::string& text) {
  auto num = [&](const std::string& s) -> std::uint64_t {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || v == 0)
      throw StrategyError("bad strategy " + text);
    return v;
  };
  if (text == "exhaustive") return exhaustive();
  if (text == "grid") return grid();
  if (text.starts_with("grid:")) return grid(static_cast<int>(num(text.substr(5))));
  if (text.starts_with("random:")) return random(num(text.substr(7)));
  throw StrategyError("unknown strategy " + text + " (exhaustive | grid[:d] | random:n)");
}

std::string Strategy::describe() const {
  switch (kind) {
    case Kind::Exhaustive: return "exhaustive";
    case Kind::Grid: return grid_d ? "grid:" + std::to_string(grid_d) : "grid";
    case Kind::Random: return "random:" + std::to_string(count);
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ValidExhaustive: return "VALID_EXHAUSTIVE";
    case Verdict::NoCounterexampleFound: return "NO_COUNTEREXAMPLE_FOUND";
    case Verdict::Countermodel: return "COUNTERMODEL";
  }
  return "?";
}

int default_grid(const std::vector<Term>& terms) {
  std::size_t n = 0;
  for (const auto& t : terms) n += syntax::count_connective(t, Kind::OPlus) + syntax::count_connective(t, Kind::Impl);
  return static_cast<int>(n) + 2;
}

std::vector<Element> grid_values(const Model& m, int d) {
  std::vector<Element> out;
  if (m.is_finite()) {
    for (std::size_t i = 0; i < m.size(); ++i) out.push_back(m.element(i));
    return out;
  }
  if (d < 1) throw StrategyError("grid denominator must be positive");
  const Rational seconds[] = {Rational(0), Rational(1, 2), Rational(-1, 2)};
  // Simplest first coordinates first (small denominator, then small
  // magnitude), so witnesses come out readable.
  std::vector<Rational> firsts;
  for (int k = -d; k <= d; ++k) firsts.emplace_back(k, d);
  std::stable_sort(firsts.begin(), firsts.end(), [](const Rational& x, const Rational& y) {
    auto key = [](const Rational& r) {
      return std::tuple(r.den(), r.num() < 0 ? -r.num() : r.num(), r.num() < 0);
    };
    return key(x) < key(y);
  });
  for (const Rational& a : firsts) {
    if (m.carrier() == Carrier::Interval) {
      out.push_back(Element::scalar(a));
      continue;
    }
    for (const auto& b : seconds) {
      Element e = Element::pair(a, b);
      if (m.contains(e)) out.push_back(e);
    }
  }
  return out;
}

Element random_element(const Model& m, std::mt19937_64& rng, std::int64_t D) {
  if (m.is_finite()) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(m.size() - 1));
    return m.element(pick(rng));
  }
  if (D < 1) throw StrategyError("max denominator must be positive");
  std::uniform_int_distribution<std::int64_t> full(-D, D), upper(0, D);
  for (;;) {
    Element e;
    switch (m.carrier()) {
      case Carrier::Interval: e = Element::scalar(Rational(full(rng), D)); break;
      case Carrier::Half: {
        Rational a(full(rng), D);
        e = Element::pair(a, Rational(upper(rng), D));
        break;
      }
      default: {
        Rational a(full(rng), D);
        e = Element::pair(a, Rational(full(rng), D));
        break;
      }
    }
    if (m.contains(e)) return e;  // rejection for the disk
  }
}

namespace {

struct Outcome {
  std::uint64_t samples = 0;
  bool truncated = false;
  bool stopped = false;
};

// Visits valuations in a fixed order; `visit` returns true to stop.
Outcome enumerate(const Model& m, std::size_t k, const Strategy& st, int d,
                  const std::function<bool(std::span<const Element>)>& visit) {
  Outcome o;
  std::vector<Element> vals(k);
  if (st.kind == Strategy::Kind::Random) {
    std::mt19937_64 rng(st.seed);
    for (std::uint64_t i = 0; i < st.count; ++i) {
      for (auto& v : vals) v = random_element(m, rng, st.max_den);
      ++o.samples;
      if (visit(vals)) {
        o.stopped = true;
        return o;
      }
    }
    return o;
  }
  if (st.kind == Strategy::Kind::Exhaustive && !m.is_finite())
    throw StrategyError("exhaustive checking needs a finite carrier; " + m.name() + " is infinite");
  std::vector<Element> pool = grid_values(m, d);
  std::vector<std::size_t> at(k, 0);
  for (std::size_t i = 0; i < k; ++i) vals[i] = pool[0];
  const bool capped = st.kind == Strategy::Kind::Grid && !m.is_finite();
  for (;;) {
    if (capped && o.samples >= st.budget) {
      o.truncated = true;
      return o;
    }
    ++o.samples;
    if (visit(vals)) {
      o.stopped = true;
      return o;
    }
    std::size_t i = 0;
    while (i < k) {
      if (++at[i] == pool.size()) {
        at[i] = 0;
        vals[i] = pool[0];
        ++i;
      } else {
        vals[i] = pool[at[i]];
        break;
      }
    }
    if (i == k) return o;
  }
}

std::vector<std::string> sorted_vars(const std::vector<Term>& terms) {
  std::set<std::string> vs;
  for (const auto& t : terms)
    for (const auto& v : syntax::variables(t)) vs.insert(v);
  return {vs.begin(), vs.end()};
}

Valuation to_valuation(const std::vector<std::string>& vars, std::span<const Element> vals) {
  Valuation v;
  for (std::size_t i = 0; i < vars.size(); ++i) v.emplace(vars[i], vals[i]);
  return v;
}

void render(Witness& w, const Model& m) {
  for (const auto& [k, e] : w.valuation) w.shown[k] = m.format(e);
  w.lhs_text = m.format(w.lhs);
  if (w.rhs) w.rhs_text = m.format(*w.rhs);
}

CheckReport base_report(const Model& m, const Strategy& st, int d) {
  CheckReport r;
  r.strategy = st;
  if (st.kind == Strategy::Kind::Grid) r.strategy.grid_d = d;
  r.seed = st.seed;
  r.model = m.name();
  return r;
}

}  // namespace

CheckReport check_equation(const Term& t, const Term& s, const Model& m, const Strategy& st) {
  syntax::require_signature(t, m.signature());
  syntax::require_signature(s, m.signature());
  auto vars = sorted_vars({t, s});
  auto pl = syntax::compile(t, vars), pr = syntax::compile(s, vars);
  int d = st.grid_d ? st.grid_d : default_grid({t, s});
  CheckReport r = base_report(m, st, d);
  std::vector<Element> s1, s2, hit;
  Outcome o = enumerate(m, vars.size(), st, d, [&](std::span<const Element> vals) {
    if (models::run(pl, m, vals, s1) == models::run(pr, m, vals, s2)) return false;
    hit.assign(vals.begin(), vals.end());
    return true;
  });
  r.samples = o.samples;
  r.truncated = o.truncated;
  if (o.stopped) {
    // Re-derive the witness with the tree evaluator, independent of the
    // compiled programs.
    Witness w{to_valuation(vars, hit), {}, {}, {}, {}, {}};
    w.lhs = evaluate(t, m, w.valuation);
    w.rhs = evaluate(s, m, w.valuation);
    if (w.lhs == *w.rhs) throw std::logic_error("countermodel does not re-check");
    render(w, m);
    r.witness = std::move(w);
    r.verdict = Verdict::Countermodel;
  } else {
    r.verdict = st.kind == Strategy::Kind::Exhaustive ? Verdict::ValidExhaustive : Verdict::NoCounterexampleFound;
  }
  return r;
}

bool DesignatedSet::contains(const Element& e) const {
  static const Rational zero(0), half(1, 2);
  switch (form_) {
    case Designation::Computed: return e.tag == Element::Tag::Index && e.index < mask_.size() && mask_[e.index];
    case Designation::PairCone: return e.tag == Element::Tag::Pair && e.b == zero && e.a >= zero;
    case Designation::HalfPairCone: return e.tag == Element::Tag::Pair && e.b == half && e.a >= zero;
    case Designation::ScalarCone: return e.tag == Element::Tag::Scalar && e.a >= zero;
    case Designation::ScalarZero: return e.tag == Element::Tag::Scalar && e.a == zero;
  }
  return false;
}

DesignatedSet designated_set(const Model& m) {
  if (m.signature() != Signature::W) throw SignatureError("designated elements need a w model; use the @w view");
  const Term c = Term::var("c");
  const auto prog = syntax::compile(Term::impl(Term::impl(c, Term::one()), Term::one()));
  std::vector<Element> scratch;
  auto lift = [&](const Element& e) {
    Element in[1] = {e};
    return models::run(prog, m, in, scratch);
  };
  DesignatedSet d;
  if (m.is_finite()) {
    d.finite_ = true;
    d.mask_.assign(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) d.mask_[lift(m.element(i)).index] = 1;
    for (std::uint32_t i = 0; i < d.mask_.size(); ++i)
      if (d.mask_[i]) d.members_.push_back(i);
    return d;
  }
  d.form_ = m.designation();
  if (d.form_ == Designation::Computed) throw SpecError("no designated closed form for " + m.name());
  // Guard: every (c->1)->1 satisfies the closed form, and the closed form
  // holds exactly at the fixpoints of c |-> (c->1)->1.
  std::mt19937_64 rng(0x5eed);
  auto sampled = grid_values(m, 6);
  for (int i = 0; i < 1000; ++i) sampled.push_back(random_element(m, rng, 60));
  for (const auto& e : sampled) {
    Element img = lift(e);
    if (!d.contains(img) || d.contains(e) != (lift(e) == e))
      throw std::logic_error("designated closed form disagrees with sampling at " + m.format(e) + " in " + m.name());
  }
  return d;
}

CheckReport check_entailment(const std::vector<Term>& premises, const Term& conclusion, const Model& m,
                             const Strategy& st) {
  for (const auto& p : premises) syntax::require_signature(p, Signature::W);
  syntax::require_signature(conclusion, Signature::W);
  DesignatedSet des = designated_set(m);
  std::vector<Term> all = premises;
  all.push_back(conclusion);
  auto vars = sorted_vars(all);
  std::vector<syntax::Program> progs;
  for (const auto& p : premises) progs.push_back(syntax::compile(p, vars));
  auto pc = syntax::compile(conclusion, vars);
  int d = st.grid_d ? st.grid_d : default_grid(all);
  CheckReport r = base_report(m, st, d);
  std::vector<Element> scratch, hit;
  Outcome o = enumerate(m, vars.size(), st, d, [&](std::span<const Element> vals) {
    for (const auto& p : progs)
      if (!des.contains(models::run(p, m, vals, scratch))) return false;
    ++r.premises_held;
    if (des.contains(models::run(pc, m, vals, scratch))) return false;
    hit.assign(vals.begin(), vals.end());
    return true;
  });
  r.samples = o.samples;
  r.truncated = o.truncated;
  if (o.stopped) {
    Witness w{to_valuation(vars, hit), {}, {}, {}, {}, {}};
    for (const auto& p : premises)
      if (!des.contains(evaluate(p, m, w.valuation))) throw std::logic_error("entailment witness does not re-check");
    w.lhs = evaluate(conclusion, m, w.valuation);
    if (des.contains(w.lhs)) throw std::logic_error("entailment witness does not re-check");
    render(w, m);
    r.witness = std::move(w);
    r.verdict = Verdict::Countermodel;
  } else {
    r.verdict = st.kind == Strategy::Kind::Exhaustive ? Verdict::ValidExhaustive : Verdict::NoCounterexampleFound;
  }
  return r;
}

CheckReport search_countermodel(const Term& t, const Term& s, const std::vector<std::string>& family,
                                const Strategy& st) {
  CheckReport agg;
  agg.strategy = st;
  agg.seed = st.seed;
  bool all_exhaustive = !family.empty();
  for (const auto& name : family) {
    Model m = models::build_model(name);
    auto fit = [&](const Term& u) {
      auto sig = syntax::implied_signature(u);
      if (!sig || *sig == m.signature()) return u;
      return m.signature() == Signature::W ? transform::mv_to_w_term(u) : transform::w_to_mv_term(u);
    };
    Strategy use = m.is_finite() ? Strategy::exhaustive() : st;
    all_exhaustive = all_exhaustive && m.is_finite();
    CheckReport r = check_equation(fit(t), fit(s), m, use);
    agg.samples += r.samples;
    agg.truncated = agg.truncated || r.truncated;
    if (r.verdict == Verdict::Countermodel) {
      r.samples = agg.samples;
      return r;
    }
  }
  agg.model = "";
  agg.verdict = all_exhaustive ? Verdict::ValidExhaustive : Verdict::NoCounterexampleFound;
  return agg;
}

std::string format_report(const CheckReport& r) {
  std::string out = "verdict: " + verdict_name(r.verdict) + "\n";
  if (!r.model.empty()) out += "model: " + r.model + "\n";
  out += "strategy: " + r.strategy.describe() + "\n";
  out += "seed: " + std::to_string(r.seed) + "\n";
  out += "samples: " + std::to_string(r.samples) + (r.truncated ? " (truncated)" : "") + "\n";
  if (r.witness) {
    out += "witness:";
    if (r.witness->shown.empty()) out += " (no variables)";
    for (const auto& [k, v] : r.witness->shown) out += " " + k + "=" + v;
    out += "\n";
    if (r.witness->rhs) {
      out += "lhs: " + r.witness->lhs_text + "\n";
      out += "rhs: " + r.witness->rhs_text + "\n";
    } else {
      out += "conclusion: " + r.witness->lhs_text + "\n";
    }
  }
  return out;
}

}  // namespace sqmv::semantics
