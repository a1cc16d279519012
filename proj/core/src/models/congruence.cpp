#include "sqmv/models/congruence.hpp"

#include <algorithm>

#include "sqmv/error.hpp"
#include "sqmv/models/classify.hpp"
#include "sqmv/models/finite.hpp"
#include "sqmv/models/standard.hpp"
#include "sqmv/syntax/abbrev.hpp"

namespace sqmv::models {

using syntax::Term;

Congruence Congruence::identity(std::size_t n) {
  Congruence c;
  for (std::uint32_t i = 0; i < n; ++i) c.class_of.push_back(i);
  c.classes = n;
  return c;
}

Congruence Congruence::all(std::size_t n) {
  Congruence c;
  c.class_of.assign(n, 0);
  c.classes = n ? 1 : 0;
  return c;
}

Congruence Congruence::from_relation(std::size_t n, const std::function<bool(std::uint32_t, std::uint32_t)>& rel) {
  Congruence c;
  std::vector<std::uint32_t> reps;
  c.class_of.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](std::uint32_t r) { return rel(r, x); });
    if (it == reps.end()) {
      c.class_of[x] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(x);
    } else {
      c.class_of[x] = static_cast<std::uint32_t>(it - reps.begin());
    }
  }
  c.classes = reps.size();
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (rel(x, y) != c.related(x, y)) throw NotCompatible("relation is not an equivalence");
  return c;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  std::size_t n = a.class_of.size();
  return Congruence::from_relation(n, [&](std::uint32_t x, std::uint32_t y) { return a.related(x, y) && b.related(x, y); });
}

bool is_compatible(const Model& m, const Congruence& th) {
  const FiniteTables* t = m.tables();
  if (!t) throw DomainError(m.name() + " is not finite");
  const std::uint32_t n = static_cast<std::uint32_t>(t->size());
  if (th.class_of.size() != n) return false;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t x2 = x + 1; x2 < n; ++x2) {
      if (!th.related(x, x2)) continue;
      if (!th.related(t->un[x], t->un[x2]) || !th.related(t->pos[x], t->pos[x2]) ||
          !th.related(t->negp[x], t->negp[x2]))
        return false;
      for (std::uint32_t y = 0; y < n; ++y)
        if (!th.related(t->b(x, y), t->b(x2, y)) || !th.related(t->b(y, x), t->b(y, x2))) return false;
    }
  return true;
}

namespace {

Model as_mv(const Model& m) { return m.signature() == Signature::MV ? m : mv_view(m, m.name()); }

}  // namespace

Congruence mu_congruence(const Model& m0) {
  Model m = as_mv(m0);
  const FiniteTables* t = m.tables();
  if (!t) throw DomainError(m.name() + " is not finite");
  const std::uint32_t n = static_cast<std::uint32_t>(t->size());
  auto prog = syntax::compile(syntax::join(Term::var("x"), Term::var("y"), Signature::MV), {"x", "y"});
  std::vector<std::uint8_t> le(n * n);
  std::vector<std::uint32_t> scratch;
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint32_t in[2] = {x, y};
      le[x * n + y] = run_indexed(prog, *t, in, scratch) == t->b(y, t->zero);
    }
  Congruence c = Congruence::from_relation(n, [&](std::uint32_t x, std::uint32_t y) { return le[x * n + y] && le[y * n + x]; });
  if (!is_compatible(m, c)) throw NotCompatible("mu is not a congruence of " + m.name());
  return c;
}

Congruence tau_congruence(const Model& m0) {
  Model m = as_mv(m0);
  const FiniteTables* t = m.tables();
  if (!t) throw DomainError(m.name() + " is not finite");
  const std::uint32_t n = static_cast<std::uint32_t>(t->size());
  std::vector<std::uint8_t> reg(n);
  for (std::uint32_t x = 0; x < n; ++x) reg[x] = t->b(x, t->zero) == x;
  Congruence c = Congruence::from_relation(n, [&](std::uint32_t x, std::uint32_t y) { return x == y || (reg[x] && reg[y]); });
  if (!is_compatible(m, c)) throw NotCompatible("tau is not a congruence of " + m.name());
  return c;
}

Model quotient(const Model& m, const Congruence& th, std::string name) {
  const FiniteTables* t = m.tables();
  if (!t) throw DomainError(m.name() + " is not finite");
  if (!is_compatible(m, th)) throw NotCompatible("partition is not compatible with " + m.name());
  std::vector<std::uint32_t> rep(th.classes, UINT32_MAX);
  for (std::uint32_t x = 0; x < t->size(); ++x)
    if (rep[th.class_of[x]] == UINT32_MAX) rep[th.class_of[x]] = x;
  const std::size_t k = th.classes;
  FiniteTables q;
  q.sig = t->sig;
  q.bin.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t x = rep[i];
    q.labels.push_back("[" + t->labels[x] + "]");
    q.un.push_back(th.class_of[t->un[x]]);
    q.pos.push_back(th.class_of[t->pos[x]]);
    q.negp.push_back(th.class_of[t->negp[x]]);
    for (std::size_t j = 0; j < k; ++j) q.bin[i * k + j] = th.class_of[t->b(x, rep[j])];
  }
  q.one = th.class_of[t->one];
  q.zero = t->sig == Signature::MV ? th.class_of[t->zero] : 0;
  if (name.empty()) name = m.name() + "/~";
  return Model(std::move(name), std::move(q));
}

Embedding embed_into_product(const Model& m) {
  if (!m.is_finite()) throw ClassError(m.name() + " is not finite");
  if (!classify(m).flags.strong) throw ClassError(m.name() + " is not a strong quasi algebra");
  Congruence mu = mu_congruence(m), tau = tau_congruence(m);
  Model b = quotient(m, mu, m.name() + "/mu");
  Model f = quotient(m, tau, m.name() + "/tau");
  Embedding e{mu, tau, product(b, f, "(" + m.name() + "/mu)x(" + m.name() + "/tau)"), {}, true, true, false, false};
  const FiniteTables& s = *m.tables();
  const FiniteTables& p = *e.target.tables();
  const std::uint32_t n = static_cast<std::uint32_t>(s.size());
  const std::uint32_t nf = static_cast<std::uint32_t>(tau.classes);
  for (std::uint32_t x = 0; x < n; ++x) e.image.push_back(mu.class_of[x] * nf + tau.class_of[x]);
  const auto& h = e.image;
  for (std::uint32_t x = 0; x < n && e.is_homomorphism; ++x) {
    e.is_homomorphism = h[s.un[x]] == p.un[h[x]] && h[s.pos[x]] == p.pos[h[x]] && h[s.negp[x]] == p.negp[h[x]];
    for (std::uint32_t y = 0; y < n && e.is_homomorphism; ++y) e.is_homomorphism = h[s.b(x, y)] == p.b(h[x], h[y]);
  }
  e.is_homomorphism = e.is_homomorphism && h[s.one] == p.one && (s.sig != Signature::MV || h[s.zero] == p.zero);
  std::vector<std::uint32_t> sorted = h;
  std::sort(sorted.begin(), sorted.end());
  e.is_injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  e.is_surjective = e.is_injective ? sorted.size() == p.size() : std::unique(sorted.begin(), sorted.end()) - sorted.begin() == static_cast<long>(p.size());
  e.is_isomorphism = e.is_homomorphism && e.is_injective && e.is_surjective;
  return e;
}

}  // namespace sqmv::models
