#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqmv/proofkit/registry.hpp"
#include "sqmv/proofkit/script.hpp"

namespace sqmv::proofkit {

enum class Reason {
  None,
  UnknownAxiom,
  NoMatchingAxiomInstance,
  BadHypothesisIndex,
  HypothesisMismatch,
  UnknownRule,
  WrongPremiseCount,
  PremiseOutOfRange,
  RuleMismatch,
  UnknownLemma,
  LemmaMismatch,
  LemmaNotAllowed,
};
std::string reason_name(Reason r);

struct LineReport {
  std::size_t line = 0;
  bool ok = false;
  Reason reason = Reason::None;
  std::string detail;  // accepted: e.g. "Q3 LR"; rejected: explanation
};

struct ProofVerdict {
  bool accepted = false;
  std::vector<LineReport> lines;
  std::optional<LineReport> first_failure;
};

// Rejection is a verdict, never an exception.
ProofVerdict check_proof(const ProofScript& s, const LemmaRegistry& registry = {});

std::string format_verdict(const ProofVerdict& v);

}  // namespace sqmv::proofkit
