#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sqmv/error.hpp"
#include "sqmv/models/catalog.hpp"
#include "sqmv/models/finite.hpp"
#include "sqmv/models/standard.hpp"
#include "sqmv/semantics/check.hpp"
#include "sqmv/semantics/evaluate.hpp"
#include "sqmv/syntax/parse.hpp"
#include "sqmv/transform/translate.hpp"

using namespace sqmv;
using namespace sqmv::transform;
using models::Model;
using syntax::Signature;
using syntax::Term;

namespace {
Term mv(const char* s) { return syntax::parse(s, Signature::MV); }
Term w(const char* s) { return syntax::parse(s, Signature::W); }

bool same_tables(const Model& a, const Model& b) {
  const auto &x = *a.tables(), &y = *b.tables();
  return x.sig == y.sig && x.bin == y.bin && x.un == y.un && x.pos == y.pos && x.negp == y.negp &&
         x.zero == y.zero && x.one == y.one;
}

semantics::Valuation sample(const Model& m, const std::vector<std::string>& vars, std::mt19937_64& rng) {
  semantics::Valuation v;
  for (auto& x : vars) v[x] = semantics::random_element(m, rng, 24);
  return v;
}
}  // namespace

TEST(TranslateTerm, MvToW) {
  EXPECT_EQ(mv_to_w_term(mv("p (+) q")), w("~p -> q"));
  EXPECT_EQ(mv_to_w_term(mv("-p")), w("~p"));
  EXPECT_EQ(mv_to_w_term(mv("0")), w("1 -> 1"));
  EXPECT_EQ(mv_to_w_term(mv("p^+ (+) q^-")), w("~p^+ -> q^-"));
  EXPECT_THROW(mv_to_w_term(w("p -> q")), SignatureError);
}

TEST(TranslateTerm, WToMv) {
  EXPECT_EQ(w_to_mv_term(w("p -> q")), mv("-p (+) q"));
  EXPECT_EQ(w_to_mv_term(w("~p")), mv("-p"));
  EXPECT_EQ(w_to_mv_term(w("1")), mv("1"));
  EXPECT_THROW(w_to_mv_term(mv("p (+) q")), SignatureError);
}

TEST(TranslateModel, SquareGoesToSquareW) {
  auto f = mv_to_w_model(models::square());
  auto sw = models::square_w();
  std::mt19937_64 rng(20);
  for (int i = 0; i < 2000; ++i) {
    auto x = semantics::random_element(sw, rng, 60), y = semantics::random_element(sw, rng, 60);
    ASSERT_EQ(f.binary(syntax::Kind::Impl, x, y), sw.binary(syntax::Kind::Impl, x, y));
    ASSERT_EQ(f.unary(syntax::Kind::Neg, x), sw.unary(syntax::Kind::Neg, x));
    ASSERT_EQ(f.unary(syntax::Kind::PosPart, x), sw.unary(syntax::Kind::PosPart, x));
  }
  EXPECT_EQ(f.constant(syntax::Kind::One), sw.constant(syntax::Kind::One));
}

TEST(TranslateModel, ChainRoundTrip) {
  auto c = models::build_model("chain:2");
  EXPECT_TRUE(same_tables(w_to_mv_model(mv_to_w_model(c)), c));
}

TEST(TranslateModel, WGridRoundTrip) {
  auto g = models::build_model("grid:square:2@w");
  EXPECT_TRUE(same_tables(mv_to_w_model(w_to_mv_model(g)), g));
}

TEST(TranslateModel, RoundTripsOnCatalog) {
  for (const auto& name : models::finite_catalog()) {
    auto m = models::build_model(name);
    EXPECT_TRUE(same_tables(w_to_mv_model(mv_to_w_model(m)), m)) << name;
    auto mw = models::build_model(name + "@w");
    EXPECT_TRUE(same_tables(mv_to_w_model(w_to_mv_model(mw)), mw)) << name;
  }
}

TEST(TranslateModel, NonStrongRefused) {
  auto g = models::ex32_grid();
  auto t = *g.tables();
  std::iota(t.pos.begin(), t.pos.end(), 0);
  EXPECT_THROW(mv_to_w_model(Model("broken", t)), ClassError);
  EXPECT_THROW(mv_to_w_model(models::build_model("square@w")), SignatureError);
}

TEST(TranslateModel, OneToOneEqualsXToX) {
  std::mt19937_64 rng(21);
  for (const char* name : {"square@w", "disk@w", "flatten:chain:2:0@w", "ex32-grid@w", "chain:3@w"}) {
    auto m = models::build_model(name);
    for (int i = 0; i < 200; ++i) {
      auto v = sample(m, {"x", "y"}, rng);
      ASSERT_EQ(semantics::evaluate(w("x -> x"), m, v), semantics::evaluate(w("1 -> 1"), m, v)) << name;
      ASSERT_EQ(semantics::evaluate(w("x -> x"), m, v), semantics::evaluate(w("y -> y"), m, v)) << name;
    }
  }
}

// Term and model translations commute with evaluation, both directions, and
// the double translation is semantically the identity.
TEST(TranslateModel, Coherence) {
  std::mt19937_64 rng(22);
  std::vector<std::string> vars = {"x", "y", "z"};
  std::vector<std::string> names = {"square", "disk", "ex32", "chain:3", "flatten:chain:2:0",
                                    "product:chain:1,flatten:chain:1:0", "ex32-grid"};
  int cases = 0;
  for (const auto& name : names) {
    auto m = models::build_model(name);
    auto fm = mv_to_w_model(m);
    for (int i = 0; i < 200; ++i, ++cases) {
      auto v = sample(m, vars, rng);
      Term t = oracle::random_term(rng, Signature::MV, 5, vars);
      auto direct = semantics::evaluate(t, m, v);
      ASSERT_EQ(direct, semantics::evaluate(mv_to_w_term(t), fm, v)) << name << " " << syntax::print(t);
      ASSERT_EQ(direct, semantics::evaluate(w_to_mv_term(mv_to_w_term(t)), m, v)) << syntax::print(t);

      Term s = oracle::random_term(rng, Signature::W, 5, vars);
      auto ws = semantics::evaluate(s, fm, v);
      ASSERT_EQ(ws, semantics::evaluate(w_to_mv_term(s), m, v)) << name << " " << syntax::print(s);
      ASSERT_EQ(ws, semantics::evaluate(mv_to_w_term(w_to_mv_term(s)), fm, v)) << syntax::print(s);
    }
  }
  EXPECT_GE(cases, 1000);
}
