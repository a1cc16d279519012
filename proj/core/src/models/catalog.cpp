#include "sqmv/models/catalog.hpp"

#include <charconv>

#include "sqmv/error.hpp"
#include "sqmv/models/finite.hpp"
#include "sqmv/models/standard.hpp"

namespace sqmv::models {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Strips one pair of parentheses enclosing the whole string.
std::string_view unwrap(std::string_view s) {
  s = trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
      if (depth == 0 && i + 1 < s.size()) {
        encloses = false;
        break;
      }
    }
    if (!encloses) break;
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

int to_int(std::string_view s, std::string_view spec) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) throw SpecError("bad number in model name " + std::string(spec));
  return v;
}

bool at_depth_zero(std::string_view s, std::size_t pos) {
  int depth = 0;
  for (std::size_t i = 0; i < pos; ++i) depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
  return depth == 0;
}

Model build_mv(std::string_view s) {
  s = unwrap(s);
  std::string name(s);
  if (s == "square") return square();
  if (s == "disk") return disk();
  if (s == "interval") return interval();
  if (s == "flat-standard") return flat_standard();
  if (s == "ex32") return ex32();
  if (s == "ex32-grid") return ex32_grid();
  if (s.starts_with("chain:")) return chain(to_int(s.substr(6), s));
  if (s.starts_with("grid:square:")) return pair_grid(square(), to_int(s.substr(12), s), name);
  if (s.starts_with("grid:disk:")) return pair_grid(disk(), to_int(s.substr(10), s), name);
  if (s.starts_with("flatten:")) {
    std::string_view rest = s.substr(8);
    auto colon = rest.rfind(':');
    if (colon == std::string_view::npos || !at_depth_zero(rest, colon)) throw SpecError("flatten:<base>:<k> expected, got " + name);
    return flatten(build_model(rest.substr(0, colon)), std::string(trim(rest.substr(colon + 1))), name);
  }
  if (s.starts_with("product:")) {
    std::string_view rest = s.substr(8);
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (rest[i] == ',' && at_depth_zero(rest, i))
        return product(build_model(rest.substr(0, i)), build_model(rest.substr(i + 1)), name);
    throw SpecError("product:<m1>,<m2> expected, got " + name);
  }
  throw SpecError("unknown model " + name);
}

}  // namespace

Model build_model(std::string_view spec) {
  std::string_view s = trim(spec);
  if (s.ends_with("@w")) {
    std::string_view base = unwrap(s.substr(0, s.size() - 2));
    if (base == "square") return square_w();
    if (base == "disk") return disk_w();
    Model m = build_model(base);
    if (m.signature() == Signature::W) return m;
    return w_view(m, std::string(s));
  }
  return build_mv(s);
}

const std::vector<std::string>& finite_catalog() {
  static const std::vector<std::string> names = {
      "chain:1",
      "chain:2",
      "chain:3",
      "flatten:chain:1:0",
      "flatten:chain:2:0",
      "flatten:chain:3:0",
      "product:chain:1,chain:1",
      "product:chain:1,flatten:chain:1:0",
      "product:chain:2,flatten:chain:1:0",
      "product:(product:chain:1,flatten:chain:1:0),(product:chain:1,flatten:chain:1:0)",
      "ex32-grid",
      "grid:square:2",
      "grid:disk:2",
  };
  return names;
}

const std::vector<std::string>& standard_catalog() {
  static const std::vector<std::string> names = {"square", "disk", "interval", "flat-standard", "ex32"};
  return names;
}

}  // namespace sqmv::models
