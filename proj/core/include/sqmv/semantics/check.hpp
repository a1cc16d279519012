#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sqmv/semantics/evaluate.hpp"

namespace sqmv::semantics {

struct Strategy {
  enum class Kind { Exhaustive, Grid, Random };
  Kind kind = Kind::Grid;
  int grid_d = 0;                  // 0: derive from the terms
  std::uint64_t count = 10000;     // random samples
  std::uint64_t seed = 0;
  std::int64_t max_den = 120;
  std::uint64_t budget = 2'000'000;  // grid valuations before truncation

  static Strategy exhaustive() { return {Kind::Exhaustive}; }
  static Strategy grid(int d = 0) { return {Kind::Grid, d}; }
  static Strategy random(std::uint64_t count, std::uint64_t seed = 0, std::int64_t max_den = 120) {
    return {Kind::Random, 0, count, seed, max_den};
  }
  // "exhaustive", "grid", "grid:<d>", "random:<n>"; StrategyError otherwise.
  static Strategy parse(const std::string& text);
  std::string describe() const;
};

enum class Verdict { ValidExhaustive, NoCounterexampleFound, Countermodel };
std::string verdict_name(Verdict v);

struct Witness {
  Valuation valuation;
  Element lhs;                 // equation: left value; entailment: conclusion value
  std::optional<Element> rhs;  // equation only
  // Rendered with the model's element syntax when the report is built.
  std::map<std::string, std::string> shown;
  std::string lhs_text, rhs_text;
};

struct CheckReport {
  Verdict verdict = Verdict::NoCounterexampleFound;
  std::uint64_t samples = 0;
  Strategy strategy;
  std::uint64_t seed = 0;
  std::string model;
  std::optional<Witness> witness;
  bool truncated = false;           // grid budget exhausted
  std::uint64_t premises_held = 0;  // entailment: valuations designating every premise
};

// Grid denominator used when Strategy::grid_d is 0: the number of (+) or ->
// occurrences in both terms, plus two.
int default_grid(const std::vector<Term>& terms);

CheckReport check_equation(const Term& t, const Term& s, const Model& m, const Strategy& strat);

// Designated elements: those of the form (c -> 1) -> 1.
class DesignatedSet {
 public:
  bool contains(const Element& e) const;
  const std::vector<std::uint32_t>& finite_members() const { return members_; }
  bool is_finite() const { return finite_; }

 private:
  friend DesignatedSet designated_set(const Model& m);
  bool finite_ = false;
  models::Designation form_ = models::Designation::Computed;
  std::vector<std::uint8_t> mask_;
  std::vector<std::uint32_t> members_;
};

// w models only. Closed forms for infinite carriers are cross-checked
// against sampling on every call; a disagreement throws std::logic_error.
DesignatedSet designated_set(const Model& m);

CheckReport check_entailment(const std::vector<Term>& premises, const Term& conclusion, const Model& m,
                             const Strategy& strat);

// Tries each named model in order: finite ones exhaustively, infinite ones
// with `strat`. Terms are translated when a model has the other signature.
CheckReport search_countermodel(const Term& t, const Term& s, const std::vector<std::string>& family,
                                const Strategy& strat);

// Per-carrier value sets used by the grid and random strategies.
std::vector<Element> grid_values(const Model& m, int d);
Element random_element(const Model& m, std::mt19937_64& rng, std::int64_t max_den);

std::string format_report(const CheckReport& r);

}  // namespace sqmv::semantics
