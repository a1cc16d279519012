#include "sqmv/models/classify.hpp"

#include <algorithm>

#include "sqmv/error.hpp"
#include "sqmv/syntax/abbrev.hpp"

namespace sqmv::models {

namespace {

std::vector<AxiomResult> run_all(const std::vector<Equation>& eqs, const Model& m) {
  std::vector<AxiomResult> out;
  for (const auto& e : eqs) out.push_back(check_exhaustive(e, m));
  return out;
}

bool all_hold(const std::vector<AxiomResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const AxiomResult& r) { return r.holds; });
}

}  // namespace

AxiomResult check_exhaustive(const Equation& eq, const Model& m) {
  const FiniteTables* t = m.tables();
  if (!t) throw DomainError(m.name() + " is not finite");
  if (eq.sig != m.signature()) throw SignatureError(eq.name + " is not in the signature of " + m.name());
  AxiomResult r;
  r.name = eq.name;
  auto vs = syntax::variables(eq.lhs);
  for (const auto& v : syntax::variables(eq.rhs)) vs.insert(v);
  r.vars.assign(vs.begin(), vs.end());
  auto pl = syntax::compile(eq.lhs, r.vars);
  auto pr = syntax::compile(eq.rhs, r.vars);
  const std::uint32_t n = static_cast<std::uint32_t>(t->size());
  std::vector<std::uint32_t> in(r.vars.size(), 0), s1, s2;
  for (;;) {
    if (run_indexed(pl, *t, in, s1) != run_indexed(pr, *t, in, s2)) {
      r.holds = false;
      r.witness = in;
      return r;
    }
    std::size_t i = 0;
    while (i < in.size() && ++in[i] == n) in[i++] = 0;
    if (i == in.size()) break;
  }
  return r;
}

Classification classify(const Model& m) {
  Classification c;
  Signature sig = m.signature();
  c.quasi = run_all(quasi_axioms(sig), m);
  c.standard = run_all(standard_axioms(sig), m);
  c.strong = run_all(strong_equations(sig), m);
  c.flat = run_all(flat_equations(sig), m);
  c.flags.sig = sig;
  c.flags.quasi = all_hold(c.quasi);
  c.flags.strong = c.flags.quasi && all_hold(c.strong);
  c.flags.flat = c.flags.quasi && all_hold(c.flat);
  c.flags.standard = all_hold(c.standard);
  return c;
}

RegularSet regular_elements(const Model& m) {
  const FiniteTables* t = m.tables();
  if (!t) throw DomainError(m.name() + " is not finite");
  const bool mv = t->sig == Signature::MV;
  const std::uint32_t n = static_cast<std::uint32_t>(t->size());
  const std::uint32_t zero = mv ? t->zero : t->b(t->one, t->one);
  RegularSet r;
  std::vector<int> where(n, -1);
  for (std::uint32_t x = 0; x < n; ++x) {
    bool reg = mv ? t->b(x, zero) == x : t->b(zero, x) == x;
    if (reg) {
      where[x] = static_cast<int>(r.elements.size());
      r.elements.push_back(x);
    }
  }
  // Restricted structure with the lattice parts taken from their defining
  // terms; those terms only involve the basic operations on R.
  FiniteTables s;
  s.sig = t->sig;
  const std::size_t k = r.elements.size();
  auto in_r = [&](std::uint32_t v) {
    if (where[v] < 0) throw ClosureError("R(" + m.name() + ") is not closed under the basic operations");
    return static_cast<std::uint32_t>(where[v]);
  };
  s.bin.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t x = r.elements[i];
    s.labels.push_back(t->labels[x]);
    s.un.push_back(in_r(t->un[x]));
    for (std::size_t j = 0; j < k; ++j) s.bin[i * k + j] = in_r(t->b(x, r.elements[j]));
  }
  s.one = in_r(t->one);
  s.zero = mv ? in_r(t->zero) : 0;
  s.pos.assign(k, 0);
  s.negp.assign(k, 0);
  Model partial("R(" + m.name() + ")", s);
  auto pp = syntax::compile(syntax::pos_def(syntax::Term::var("x"), s.sig));
  auto pn = syntax::compile(syntax::neg_def(syntax::Term::var("x"), s.sig));
  std::vector<std::uint32_t> scratch;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint32_t in[1] = {i};
    s.pos[i] = run_indexed(pp, *partial.tables(), in, scratch);
    s.negp[i] = run_indexed(pn, *partial.tables(), in, scratch);
  }
  Model restricted("R(" + m.name() + ")", std::move(s));
  r.forms_standard = all_hold(run_all(standard_axioms(restricted.signature()), restricted));
  return r;
}

}  // namespace sqmv::models
