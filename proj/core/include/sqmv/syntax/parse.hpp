#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "sqmv/syntax/term.hpp"

namespace sqmv::syntax {

// Grammar (loosest to tightest):
//   bicond := infix [ "<->" infix ]              (parse_biconditional only)
//   infix  := join "->" infix | join { "(+)" join }
//   join   := unary { "\/" unary }               (expanded at parse time)
//   unary  := ("-" | "~") unary | postfix
//   postfix:= atom { "^+" | "^-" }
//   atom   := var | "0" | "1" | "(" infix ")"
Term parse(std::string_view text, Signature sig);
std::pair<Term, std::optional<Term>> parse_biconditional(std::string_view text, Signature sig);

std::string print(const Term& t);

}  // namespace sqmv::syntax
