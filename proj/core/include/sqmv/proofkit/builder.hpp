#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sqmv/proofkit/script.hpp"

namespace sqmv::proofkit {

// Appends proof lines and hands back their 1-based numbers. Formulas are
// stored as given; the checker compares core forms.
class ProofBuilder {
 public:
  explicit ProofBuilder(System s, std::vector<Term> hypotheses = {});

  std::size_t hyp(const Term& f);  // adds f to the hypotheses if needed
  std::size_t axiom(const Term& f, std::string name, std::optional<Direction> d = std::nullopt);
  std::size_t rule(const Term& f, std::string name, std::vector<std::size_t> premises);
  std::size_t lemma(const Term& f, std::string id, std::vector<std::size_t> premises = {});

  // Copies s's lines (hypothesis references remapped, line numbers shifted)
  // and returns the number of its last line.
  std::size_t embed(const ProofScript& s);

  const Term& formula(std::size_t line) const { return script_.lines.at(line - 1).formula; }
  std::size_t size() const { return script_.lines.size(); }
  const ProofScript& script() const { return script_; }

 private:
  std::size_t hyp_index(const Term& f);
  std::size_t push(const Term& f, Justification j);
  ProofScript script_;
};

}  // namespace sqmv::proofkit
