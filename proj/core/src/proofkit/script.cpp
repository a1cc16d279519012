#include "sqmv/proofkit/script.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "sqmv/error.hpp"
#include "sqmv/syntax/parse.hpp"

namespace sqmv::proofkit {

std::string system_name(System s) { return s == System::SqL ? "sqL*" : "L*"; }

std::string direction_name(Direction d) {
  switch (d) {
    case Direction::LR: return "LR";
    case Direction::RL: return "RL";
    case Direction::NA: return "NA";
  }
  return "?";
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t to_index(const std::string& s, std::size_t lineno) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ScriptFormatError("line " + std::to_string(lineno) + ": expected a number, got '" + s + "'");
  return std::stoul(s);
}

std::vector<std::size_t> index_list(const std::string& s, std::size_t lineno) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(to_index(trim(s.substr(start, comma - start)), lineno));
    start = comma + 1;
  }
  return out;
}

Justification parse_just(const std::string& text, std::size_t lineno) {
  auto w = words(text);
  auto fail = [&](const std::string& why) {
    return ScriptFormatError("line " + std::to_string(lineno) + ": " + why + " in '" + text + "'");
  };
  if (w.empty()) throw fail("missing justification");
  std::string joined;  // premise lists may contain spaces after commas
  for (std::size_t i = 2; i < w.size(); ++i) joined += w[i];
  if (w[0] == "AX") {
    if (w.size() < 2 || w.size() > 3) throw fail("AX <name> [LR|RL] expected");
    AxiomRef a{w[1], std::nullopt};
    if (w.size() == 3) {
      if (w[2] == "LR")
        a.direction = Direction::LR;
      else if (w[2] == "RL")
        a.direction = Direction::RL;
      else
        throw fail("direction must be LR or RL");
    }
    return a;
  }
  if (w[0] == "HYP") {
    if (w.size() != 2) throw fail("HYP <i> expected");
    return HypRef{to_index(w[1], lineno)};
  }
  if (w[0] == "RULE") {
    if (w.size() < 3) throw fail("RULE <name> <i[,j]> expected");
    return RuleRef{w[1], index_list(joined, lineno)};
  }
  if (w[0] == "LEM") {
    if (w.size() < 2) throw fail("LEM <id> [<i[,j]>] expected");
    return LemmaRef{w[1], w.size() > 2 ? index_list(joined, lineno) : std::vector<std::size_t>{}};
  }
  throw fail("unknown justification kind " + w[0]);
}

}  // namespace

ProofScript parse_script(std::string_view text) {
  ProofScript s;
  bool have_system = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!have_system) {
      if (!line.starts_with("system:")) throw ScriptFormatError("line " + std::to_string(lineno) + ": expected 'system:' header");
      std::string sys = trim(line.substr(7));
      if (sys == "sqL*")
        s.system = System::SqL;
      else if (sys == "L*")
        s.system = System::L;
      else
        throw ScriptFormatError("unknown system " + sys);
      have_system = true;
      continue;
    }
    if (line.starts_with("hyp:")) {
      if (!s.lines.empty()) throw ScriptFormatError("line " + std::to_string(lineno) + ": hyp after proof lines");
      s.hypotheses.push_back(syntax::parse(trim(line.substr(4)), syntax::Signature::W));
      continue;
    }
    auto dot = line.find('.');
    auto semi = line.find(';');
    if (dot == std::string::npos || semi == std::string::npos || semi < dot)
      throw ScriptFormatError("line " + std::to_string(lineno) + ": expected '<n>. <formula> ; <justification>'");
    std::size_t n = to_index(trim(line.substr(0, dot)), lineno);
    if (n != s.lines.size() + 1)
      throw ScriptFormatError("line " + std::to_string(lineno) + ": proof line " + std::to_string(n) +
                              " out of sequence (expected " + std::to_string(s.lines.size() + 1) + ")");
    Term f = syntax::parse(trim(line.substr(dot + 1, semi - dot - 1)), syntax::Signature::W);
    s.lines.push_back({f, parse_just(trim(line.substr(semi + 1)), lineno)});
  }
  if (!have_system) throw ScriptFormatError("missing 'system:' header");
  if (s.lines.empty()) throw ScriptFormatError("script has no proof lines");
  return s;
}

ProofScript load_script(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ScriptFormatError("cannot read " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_script(buf.str());
}

namespace {

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string format_justification(const Justification& j) {
  struct V {
    std::string operator()(const AxiomRef& a) const {
      return "AX " + a.name + (a.direction ? " " + direction_name(*a.direction) : "");
    }
    std::string operator()(const HypRef& h) const { return "HYP " + std::to_string(h.index); }
    std::string operator()(const RuleRef& r) const { return "RULE " + r.name + " " + join_indices(r.premises); }
    std::string operator()(const LemmaRef& l) const {
      return "LEM " + l.id + (l.premises.empty() ? "" : " " + join_indices(l.premises));
    }
  };
  return std::visit(V{}, j);
}

std::string format_script(const ProofScript& s) {
  std::string out = "system: " + system_name(s.system) + "\n";
  for (const auto& h : s.hypotheses) out += "hyp: " + syntax::print(h) + "\n";
  for (std::size_t i = 0; i < s.lines.size(); ++i)
    out += std::to_string(i + 1) + ". " + syntax::print(s.lines[i].formula) + " ; " +
           format_justification(s.lines[i].just) + "\n";
  return out;
}

}  // namespace sqmv::proofkit
