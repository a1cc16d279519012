#include "sqmv/models/axioms.hpp"

#include <utility>

#include "sqmv/syntax/parse.hpp"

namespace sqmv::models {

using syntax::Signature;

namespace {

std::vector<Equation> build(Signature sig, std::initializer_list<std::pair<const char*, const char*>> rows) {
  std::vector<Equation> out;
  for (const auto& [name, text] : rows) {
    std::string s(text);
    auto eq = s.find(" = ");
    out.push_back({name, syntax::parse(s.substr(0, eq), sig), syntax::parse(s.substr(eq + 3), sig), sig});
  }
  return out;
}

}  // namespace

const std::vector<Equation>& quasi_axioms(Signature sig) {
  static const auto mv = build(Signature::MV, {
      {"QMV*1", "x (+) y = y (+) x"},
      {"QMV*2", "(1 (+) x) (+) (y (+) (1 (+) z)) = ((1 (+) x) (+) y) (+) (1 (+) z)"},
      {"QMV*3", "(x (+) 1) (+) 1 = 1"},
      {"QMV*4", "(x (+) y) (+) 0 = x (+) y"},
      {"QMV*5a", "x^+ (+) 0 = (x (+) 0)^+"},
      {"QMV*5b", "(x (+) 0)^+ = 1 (+) (-1 (+) x)"},
      {"QMV*5c", "x^- (+) 0 = (x (+) 0)^-"},
      {"QMV*5d", "(x (+) 0)^- = -1 (+) (1 (+) x)"},
      {"QMV*6", "x (+) y = (x^+ (+) y^+) (+) (x^- (+) y^-)"},
      {"QMV*7", "0 = -0"},
      {"QMV*8", "x (+) -x = 0"},
      {"QMV*9", "-(x (+) y) = -x (+) -y"},
      {"QMV*10", "--x = x"},
      {"QMV*11", "(-x (+) (x (+) y))^+ = -x^+ (+) (x^+ (+) y^+)"},
      {"QMV*12", "x \\/ y = y \\/ x"},
      {"QMV*13", "x \\/ (y \\/ z) = (x \\/ y) \\/ z"},
      {"QMV*14", "x (+) (y \\/ z) = (x (+) y) \\/ (x (+) z)"},
  });
  static const auto w = build(Signature::W, {
      {"QW*1", "x -> y = ~y -> ~x"},
      {"QW*2", "(x -> 1) -> ((y -> 1) -> z) = (y -> 1) -> ((x -> 1) -> z)"},
      {"QW*3", "(1 -> x) -> 1 = 1"},
      {"QW*4", "(z -> z) -> (x -> y) = x -> y"},
      {"QW*5a", "(1 -> 1) -> x^+ = ((1 -> 1) -> x)^+"},
      {"QW*5b", "((1 -> 1) -> x)^+ = (x -> 1) -> 1"},
      {"QW*5c", "(1 -> 1) -> x^- = ((1 -> 1) -> x)^-"},
      {"QW*5d", "((1 -> 1) -> x)^- = (x -> ~1) -> ~1"},
      {"QW*6", "x -> y = (y^+ -> x^-) -> (x^+ -> y^-)"},
      {"QW*7", "~(x -> y) = y -> x"},
      {"QW*8", "~~x = x"},
      {"QW*9", "(x -> (~x -> y))^+ = x^+ -> (~x^+ -> y^+)"},
      {"QW*10", "x \\/ y = y \\/ x"},
      {"QW*11", "x \\/ (y \\/ z) = (x \\/ y) \\/ z"},
      {"QW*12", "x -> (y \\/ z) = (x -> y) \\/ (x -> z)"},
  });
  return sig == Signature::MV ? mv : w;
}

const std::vector<Equation>& standard_axioms(Signature sig) {
  static const auto mv = build(Signature::MV, {
      {"MV*1", "x (+) y = y (+) x"},
      {"MV*2", "(1 (+) x) (+) (y (+) (1 (+) z)) = ((1 (+) x) (+) y) (+) (1 (+) z)"},
      {"MV*3", "x (+) -x = 0"},
      {"MV*4", "(x (+) 1) (+) 1 = 1"},
      {"MV*5", "x (+) 0 = x"},
      {"MV*6", "-(x (+) y) = -x (+) -y"},
      {"MV*7", "--x = x"},
      {"MV*8", "x (+) y = (x^+ (+) y^+) (+) (x^- (+) y^-)"},
      {"MV*9", "(-x (+) (x (+) y))^+ = -x^+ (+) (x^+ (+) y^+)"},
      {"MV*10", "x \\/ y = y \\/ x"},
      {"MV*11", "x \\/ (y \\/ z) = (x \\/ y) \\/ z"},
      {"MV*12", "x (+) (y \\/ z) = (x (+) y) \\/ (x (+) z)"},
      {"def+", "x^+ = 1 (+) (-1 (+) x)"},
      {"def-", "x^- = -1 (+) (1 (+) x)"},
  });
  static const auto w = build(Signature::W, {
      {"W*1", "x -> y = ~y -> ~x"},
      {"W*2", "(x -> 1) -> ((y -> 1) -> z) = (y -> 1) -> ((x -> 1) -> z)"},
      {"W*3", "(1 -> x) -> 1 = 1"},
      {"W*4", "(y -> y) -> x = x"},
      {"W*5", "x -> y = (y^+ -> x^-) -> (x^+ -> y^-)"},
      {"W*6", "~(x -> y) = y -> x"},
      {"W*7", "~~x = x"},
      {"W*8", "(x -> (~x -> y))^+ = x^+ -> (~x^+ -> y^+)"},
      {"W*9", "x \\/ y = y \\/ x"},
      {"W*10", "x \\/ (y \\/ z) = (x \\/ y) \\/ z"},
      {"W*11", "x -> (y \\/ z) = (x -> y) \\/ (x -> z)"},
      {"def+", "x^+ = (x -> 1) -> 1"},
      {"def-", "x^- = (x -> ~1) -> ~1"},
  });
  return sig == Signature::MV ? mv : w;
}

const std::vector<Equation>& strong_equations(Signature sig) {
  static const auto mv = build(Signature::MV, {
      {"strong+", "x^+ = x^+ (+) 0"},
      {"strong-", "x^- = x^- (+) 0"},
  });
  static const auto w = build(Signature::W, {
      {"strong+", "x^+ = (1 -> 1) -> x^+"},
      {"strong-", "x^- = (1 -> 1) -> x^-"},
  });
  return sig == Signature::MV ? mv : w;
}

const std::vector<Equation>& flat_equations(Signature sig) {
  static const auto mv = build(Signature::MV, {{"flat", "0 = 1"}});
  static const auto w = build(Signature::W, {{"flat", "1 -> 1 = 1"}});
  return sig == Signature::MV ? mv : w;
}

}  // namespace sqmv::models
