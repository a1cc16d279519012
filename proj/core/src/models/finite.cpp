#include "sqmv/models/finite.hpp"

#include <sstream>
#include <unordered_map>

#include "sqmv/error.hpp"
#include "sqmv/models/standard.hpp"

namespace sqmv::models {

Model restrict(const Model& base, const std::vector<Element>& elements, std::string name) {
  if (base.is_finite()) throw SpecError("restrict expects an infinite base model");
  std::unordered_map<Element, std::uint32_t, ElementHash> where;
  for (std::uint32_t i = 0; i < elements.size(); ++i) {
    base.require_member(elements[i]);
    if (!where.emplace(elements[i], i).second) throw SpecError("duplicate element " + base.format(elements[i]));
  }
  auto find = [&](const Element& e) {
    auto it = where.find(e);
    if (it == where.end()) throw ClosureError(name + ": " + base.format(e) + " lies outside the subset");
    return it->second;
  };
  std::size_t n = elements.size();
  FiniteTables t;
  t.sig = base.signature();
  const bool mv = t.sig == Signature::MV;
  t.bin.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    t.labels.push_back(base.format(elements[i]));
    t.un.push_back(find(base.unary(mv ? Kind::UMinus : Kind::Neg, elements[i])));
    t.pos.push_back(find(base.unary(Kind::PosPart, elements[i])));
    t.negp.push_back(find(base.unary(Kind::NegPart, elements[i])));
    for (std::size_t j = 0; j < n; ++j)
      t.bin[i * n + j] = find(base.binary(mv ? Kind::OPlus : Kind::Impl, elements[i], elements[j]));
  }
  t.one = find(base.constant(Kind::One));
  t.zero = mv ? find(base.constant(Kind::Zero)) : 0;
  return Model(std::move(name), std::move(t), elements);
}

Model chain(int n) {
  if (n < 1) throw SpecError("chain:<n> needs n >= 1");
  std::vector<Element> els;
  for (int k = -n; k <= n; ++k) els.push_back(Element::scalar(Rational(k, n)));
  return restrict(interval(), els, "chain:" + std::to_string(n));
}

Model flatten(const Model& base, const std::string& k, std::string name) {
  const FiniteTables* bt = base.tables();
  if (!bt) throw SpecError("flatten expects a finite base model");
  if (base.signature() != Signature::MV) throw SignatureError("flatten expects an mv model");
  std::size_t n = bt->size();
  auto fixpoint = [&](std::uint32_t x) { return bt->un[x] == x && bt->b(x, bt->zero) == x; };
  std::optional<std::uint32_t> any_fix;
  for (std::uint32_t x = 0; x < n && !any_fix; ++x)
    if (fixpoint(x)) any_fix = x;

  FiniteTables t;
  t.sig = Signature::MV;
  t.labels = bt->labels;
  t.un = bt->un;
  std::uint32_t kk;
  if (k == "new") {
    if (any_fix) throw SpecError("- has a fixpoint over R(A); flatten at " + bt->labels[*any_fix] + " instead");
    kk = static_cast<std::uint32_t>(n);
    t.labels.push_back("k");
    t.un.push_back(kk);
  } else {
    auto it = std::find(bt->labels.begin(), bt->labels.end(), k);
    if (it == bt->labels.end()) throw SpecError("no element " + k + " in " + base.name());
    kk = static_cast<std::uint32_t>(it - bt->labels.begin());
    if (!fixpoint(kk)) throw SpecError(k + " is not a fixpoint of - over R(A) in " + base.name());
  }
  std::size_t m = t.labels.size();
  t.bin.assign(m * m, kk);
  t.pos.assign(m, kk);
  t.negp.assign(m, kk);
  t.zero = t.one = kk;
  return Model(std::move(name), std::move(t));
}

Model product(const Model& m1, const Model& m2, std::string name) {
  const FiniteTables* a = m1.tables();
  const FiniteTables* b = m2.tables();
  if (!a || !b) throw SpecError("product expects finite factors");
  if (a->sig != b->sig) throw SignatureError("product factors disagree on signature");
  std::size_t n1 = a->size(), n2 = b->size(), n = n1 * n2;
  auto pack = [&](std::uint32_t i, std::uint32_t j) { return static_cast<std::uint32_t>(i * n2 + j); };
  FiniteTables t;
  t.sig = a->sig;
  t.bin.resize(n * n);
  for (std::uint32_t i = 0; i < n1; ++i)
    for (std::uint32_t j = 0; j < n2; ++j) {
      t.labels.push_back("<" + a->labels[i] + "," + b->labels[j] + ">");
      t.un.push_back(pack(a->un[i], b->un[j]));
      t.pos.push_back(pack(a->pos[i], b->pos[j]));
      t.negp.push_back(pack(a->negp[i], b->negp[j]));
    }
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      t.bin[x * n + y] = pack(a->b(x / n2, y / n2), b->b(x % n2, y % n2));
  t.one = pack(a->one, b->one);
  t.zero = pack(a->zero, b->zero);
  return Model(std::move(name), std::move(t));
}

Model ex32_grid() {
  std::vector<Element> els;
  for (int i = -2; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) els.push_back(Element::pair(Rational(i, 2), Rational(j, 2)));
  return restrict(ex32(), els, "ex32-grid");
}

Model pair_grid(const Model& base, int d, std::string name) {
  if (d < 1) throw SpecError("grid denominator must be positive");
  std::vector<Element> els;
  for (int i = -d; i <= d; ++i)
    for (int j = -d; j <= d; ++j) {
      Element e = Element::pair(Rational(i, d), Rational(j, d));
      if (base.contains(e)) els.push_back(e);
    }
  return restrict(base, els, std::move(name));
}

std::string export_tables(const Model& m) {
  const FiniteTables* t = m.tables();
  if (!t) throw SpecError(m.name() + " has no finite tables");
  const bool mv = t->sig == Signature::MV;
  const auto& L = t->labels;
  std::ostringstream out;
  out << "model " << m.name() << "\n";
  out << "signature " << (mv ? "mv" : "w") << "\n";
  out << "elements";
  for (const auto& l : L) out << ' ' << l;
  out << "\n";
  if (mv) out << "zero = " << L[t->zero] << "\n";
  out << "one = " << L[t->one] << "\n";
  for (std::size_t x = 0; x < L.size(); ++x) out << (mv ? "minus " : "neg ") << L[x] << " = " << L[t->un[x]] << "\n";
  for (std::size_t x = 0; x < L.size(); ++x) out << "pos " << L[x] << " = " << L[t->pos[x]] << "\n";
  for (std::size_t x = 0; x < L.size(); ++x) out << "negpart " << L[x] << " = " << L[t->negp[x]] << "\n";
  for (std::size_t x = 0; x < L.size(); ++x)
    for (std::size_t y = 0; y < L.size(); ++y)
      out << (mv ? "oplus " : "impl ") << L[x] << ' ' << L[y] << " = " << L[t->b(x, y)] << "\n";
  return out.str();
}

}  // namespace sqmv::models
