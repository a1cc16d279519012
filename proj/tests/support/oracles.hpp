#pragma once

// Reference implementations written straight from the model definitions,
// sharing nothing with the library but Rational and Term. Tests compare the
// library against these.

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqmv/rational.hpp"
#include "sqmv/syntax/term.hpp"

namespace oracle {

using sqmv::Rational;
using sqmv::syntax::Kind;
using sqmv::syntax::Signature;
using sqmv::syntax::Term;

inline Rational clamp(const Rational& x) {
  if (x < Rational(-1)) return Rational(-1);
  if (Rational(1) < x) return Rational(1);
  return x;
}
inline Rational max0(const Rational& x) { return x < Rational(0) ? Rational(0) : x; }
inline Rational min0(const Rational& x) { return Rational(0) < x ? Rational(0) : x; }

struct Pair {
  Rational a, b;
  bool operator==(const Pair&) const = default;
};

// Pair carriers. `half` selects the [-1,1]x[0,1] model whose operations park
// the second coordinate at 1/2 and whose minus sends b to 1-b.
struct PairAlgebra {
  bool half = false;
  Rational park() const { return half ? Rational(1, 2) : Rational(0); }

  Pair oplus(const Pair& x, const Pair& y) const { return {clamp(x.a + y.a), park()}; }
  Pair minus(const Pair& x) const { return {-x.a, half ? Rational(1) - x.b : -x.b}; }
  Pair pos(const Pair& x) const { return {max0(x.a), park()}; }
  Pair negp(const Pair& x) const { return {min0(x.a), park()}; }
  Pair zero() const { return {Rational(0), park()}; }
  Pair one() const { return {Rational(1), park()}; }
  // SW*: x -> y = <clamp(c - a), 0>
  Pair impl(const Pair& x, const Pair& y) const { return {clamp(y.a - x.a), park()}; }

  Pair eval(const Term& t, const std::map<std::string, Pair>& v) const {
    switch (t.kind()) {
      case Kind::Var: return v.at(t.name());
      case Kind::Zero: return zero();
      case Kind::One: return one();
      case Kind::OPlus: return oplus(eval(t.left(), v), eval(t.right(), v));
      case Kind::UMinus:
      case Kind::Neg: return minus(eval(t.arg(), v));
      case Kind::Impl: return impl(eval(t.left(), v), eval(t.right(), v));
      case Kind::PosPart: return pos(eval(t.arg(), v));
      case Kind::NegPart: return negp(eval(t.arg(), v));
    }
    throw std::logic_error("bad kind");
  }
};

inline bool in_disk(const Pair& p) { return !(Rational(1) < p.a * p.a + p.b * p.b); }

// Uniform numerator over a fixed denominator.
inline Rational random_unit(std::mt19937_64& rng, std::int64_t den = 24, bool nonnegative = false) {
  std::uniform_int_distribution<std::int64_t> d(nonnegative ? 0 : -den, den);
  return Rational(d(rng), den);
}

inline Pair random_square(std::mt19937_64& rng) { return {random_unit(rng), random_unit(rng)}; }
inline Pair random_disk(std::mt19937_64& rng) {
  for (;;) {
    Pair p = random_square(rng);
    if (in_disk(p)) return p;
  }
}

// Random term over `vars` of depth <= `depth`. Without abbreviations no ^+/^-.
inline Term random_term(std::mt19937_64& rng, Signature sig, int depth, const std::vector<std::string>& vars,
                        bool abbreviations = true) {
  std::uniform_int_distribution<int> pick(0, 99);
  if (depth <= 0 || pick(rng) < 20) {
    int r = pick(rng);
    if (r < 70) return Term::var(vars[pick(rng) % vars.size()]);
    if (sig == Signature::MV && r < 85) return Term::zero();
    return Term::one();
  }
  int r = pick(rng);
  auto sub = [&] { return random_term(rng, sig, depth - 1, vars, abbreviations); };
  if (abbreviations && r < 10) return Term::pos(sub());
  if (abbreviations && r < 20) return Term::negpart(sub());
  if (r < 45) return sig == Signature::MV ? Term::uminus(sub()) : Term::neg(sub());
  Term a = sub();
  Term b = sub();
  return sig == Signature::MV ? Term::oplus(a, b) : Term::impl(a, b);
}

// Turns a square valuation on which t and s differ into a disk valuation on
// which they still differ. Regular terms ignore second coordinates, so when
// both sides are regular the second coordinates are zeroed; a bare (negated)
// variable side is given a point off the b = 0 axis, which no regular side
// can reach; two bare sides get distinct points.
inline std::map<std::string, Pair> disk_witness(const Term& t, const Term& s, std::map<std::string, Pair> v) {
  auto base = [](Term x) {
    while (x.kind() == Kind::UMinus) x = x.arg();
    return x;
  };
  bool rt = sqmv::syntax::is_regular(t), rs = sqmv::syntax::is_regular(s);
  for (auto& [_, p] : v) p.b = Rational(0);
  if (rt && rs) return v;
  if (rt != rs) {
    auto& p = v[base(rt ? s : t).name()];
    p = {p.a / Rational(2), Rational(1, 2)};
    return v;
  }
  std::string x = base(t).name(), y = base(s).name();
  v[x] = {Rational(0), Rational(0)};
  v[y] = {Rational(0), Rational(1, 2)};
  return v;
}

struct CorpusEquation {
  bool valid;
  std::string lhs, rhs;
};

// "valid|invalid ; lhs = rhs" lines, '#' comments.
inline std::vector<CorpusEquation> load_corpus(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::vector<CorpusEquation> out;
  for (std::string line; std::getline(f, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto semi = line.find(';');
    auto eq = line.find(" = ");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    out.push_back({trim(line.substr(0, semi)) == "valid", trim(line.substr(semi + 1, eq - semi - 1)),
                   trim(line.substr(eq + 3))});
  }
  return out;
}

}  // namespace oracle
