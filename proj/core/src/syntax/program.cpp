#include "sqmv/syntax/program.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

namespace sqmv::syntax {

namespace {

struct Compiler {
  Program prog;
  std::map<std::string, std::uint32_t> var_slot;
  std::map<std::tuple<Kind, std::uint32_t, std::uint32_t>, std::uint32_t> shared;
  std::unordered_map<Term, std::uint32_t, TermHash> seen;

  std::uint32_t emit(const Term& t) {
    if (t.kind() == Kind::Var) return var_slot.at(t.name());
    if (auto it = seen.find(t); it != seen.end()) return it->second;
    std::uint32_t a = 0, b = 0;
    if (t.arity() >= 1) a = emit(t.child(0));
    if (t.arity() == 2) b = emit(t.child(1));
    auto key = std::make_tuple(t.kind(), a, b);
    auto it = shared.find(key);
    std::uint32_t slot;
    if (it != shared.end()) {
      slot = it->second;
    } else {
      slot = static_cast<std::uint32_t>(prog.slots());
      prog.code.push_back({t.kind(), a, b});
      shared.emplace(key, slot);
    }
    seen.emplace(t, slot);
    return slot;
  }
};

}  // namespace

Program compile(const Term& t, const std::vector<std::string>& order) {
  Compiler c;
  c.prog.vars = order;
  for (const auto& v : variables(t))
    if (std::find(order.begin(), order.end(), v) == order.end()) c.prog.vars.push_back(v);
  for (std::uint32_t i = 0; i < c.prog.vars.size(); ++i) c.var_slot[c.prog.vars[i]] = i;
  c.prog.result = c.emit(t);
  return c.prog;
}

}  // namespace sqmv::syntax
