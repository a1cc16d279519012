#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sqmv/proofkit/script.hpp"

namespace sqmv::proofkit {

// A schematic rule certified by a sqL* derivation from its hypotheses.
struct DerivedRule {
  std::string id;
  std::vector<Term> hypotheses;
  Term conclusion;
  ProofScript certificate;
};

// Hypotheses are the script's hyp lines, the conclusion its last line.
DerivedRule derive_rule(std::string id, ProofScript certificate);

class LemmaRegistry {
 public:
  const DerivedRule* find(const std::string& id) const;
  const std::vector<DerivedRule>& rules() const { return rules_; }

 private:
  friend LemmaRegistry register_lemma(LemmaRegistry reg, DerivedRule rule);
  std::vector<DerivedRule> rules_;
};

// CertificationFailed unless the certificate is a sqL* script whose hyp
// lines and last line are the rule's hypotheses and conclusion and which
// checks against `reg` (so lemmas must be registered after everything they
// cite). Duplicate ids are refused too.
LemmaRegistry register_lemma(LemmaRegistry reg, DerivedRule rule);

// Manifest "registry.txt" in `dir`: one "<id> <file>" pair per line, in
// registration order.
std::vector<std::pair<std::string, std::string>> read_manifest(const std::string& dir);
LemmaRegistry load_registry(const std::string& dir);

}  // namespace sqmv::proofkit
