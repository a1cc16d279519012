#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sqmv/syntax/term.hpp"

namespace sqmv::syntax {

// A term flattened into straight-line code with shared subterms computed
// once. Slots [0, vars.size()) hold the variable inputs in `vars` order;
// every instruction writes the next slot.
struct Program {
  struct Instr {
    Kind op;
    std::uint32_t a = 0, b = 0;
  };
  std::vector<std::string> vars;
  std::vector<Instr> code;
  std::uint32_t result = 0;

  std::size_t slots() const { return vars.size() + code.size(); }
};

// `order` fixes the input order; variables of t missing from it are appended
// in sorted order.
Program compile(const Term& t, const std::vector<std::string>& order = {});

}  // namespace sqmv::syntax
