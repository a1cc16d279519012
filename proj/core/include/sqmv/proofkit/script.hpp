#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sqmv/syntax/term.hpp"

namespace sqmv::proofkit {

using syntax::Term;

enum class System { SqL, L };  // sqL*, L*
enum class Direction { LR, RL, NA };

std::string system_name(System s);
std::string direction_name(Direction d);

// Line and hypothesis numbers are 1-based, as in the file format.
struct AxiomRef {
  std::string name;
  std::optional<Direction> direction;  // unset: inferred by the checker
};
struct HypRef {
  std::size_t index;
};
struct RuleRef {
  std::string name;
  std::vector<std::size_t> premises;
};
struct LemmaRef {
  std::string id;
  std::vector<std::size_t> premises;
};
using Justification = std::variant<AxiomRef, HypRef, RuleRef, LemmaRef>;

struct ProofLine {
  Term formula;
  Justification just;
};

struct ProofScript {
  System system = System::SqL;
  std::vector<Term> hypotheses;
  std::vector<ProofLine> lines;

  const Term& conclusion() const { return lines.back().formula; }
};

// File format:
//   system: sqL* | L*
//   hyp: <formula>                    (zero or more)
//   <n>. <formula> ; <JUST>
// JUST is "AX <name> [LR|RL]", "HYP <i>", "RULE <name> <i[,j]>" or
// "LEM <id> [<i[,j,...]>]". '#' starts a comment. Malformed files raise
// ScriptFormatError; bad formulas raise SyntaxError or SignatureError.
ProofScript parse_script(std::string_view text);
ProofScript load_script(const std::string& path);  // ScriptFormatError if unreadable

std::string format_justification(const Justification& j);
std::string format_script(const ProofScript& s);

}  // namespace sqmv::proofkit
