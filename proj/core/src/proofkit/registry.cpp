#include "sqmv/proofkit/registry.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sqmv/error.hpp"
#include "sqmv/proofkit/checker.hpp"

namespace sqmv::proofkit {

DerivedRule derive_rule(std::string id, ProofScript certificate) {
  if (certificate.lines.empty()) throw CertificationFailed("lemma " + id + " has an empty certificate");
  DerivedRule r{std::move(id), certificate.hypotheses, certificate.conclusion(), {}};
  r.certificate = std::move(certificate);
  return r;
}

const DerivedRule* LemmaRegistry::find(const std::string& id) const {
  for (const auto& r : rules_)
    if (r.id == id) return &r;
  return nullptr;
}

LemmaRegistry register_lemma(LemmaRegistry reg, DerivedRule rule) {
  const std::string who = "lemma " + rule.id + ": ";
  if (reg.find(rule.id)) throw CertificationFailed(who + "already registered");
  const ProofScript& c = rule.certificate;
  if (c.system != System::SqL) throw CertificationFailed(who + "certificate is not a sqL* script");
  if (c.lines.empty() || c.conclusion() != rule.conclusion)
    throw CertificationFailed(who + "certificate does not end in the conclusion");
  if (c.hypotheses != rule.hypotheses) throw CertificationFailed(who + "certificate hypotheses differ");
  ProofVerdict v = check_proof(c, reg);
  if (!v.accepted)
    throw CertificationFailed(who + "certificate rejected at line " + std::to_string(v.first_failure->line) + " (" +
                              reason_name(v.first_failure->reason) + ": " + v.first_failure->detail + ")");
  reg.rules_.push_back(std::move(rule));
  return reg;
}

std::vector<std::pair<std::string, std::string>> read_manifest(const std::string& dir) {
  auto path = std::filesystem::path(dir) / "registry.txt";
  std::ifstream f(path);
  if (!f) throw ScriptFormatError("cannot read " + path.string());
  std::vector<std::pair<std::string, std::string>> out;
  for (std::string line; std::getline(f, line);) {
    line = line.substr(0, line.find('#'));
    std::istringstream in(line);
    std::string id, file;
    if (!(in >> id)) continue;
    if (!(in >> file)) throw ScriptFormatError("registry.txt: missing file for lemma " + id);
    out.emplace_back(id, (std::filesystem::path(dir) / file).string());
  }
  return out;
}

LemmaRegistry load_registry(const std::string& dir) {
  LemmaRegistry reg;
  for (const auto& [id, file] : read_manifest(dir)) reg = register_lemma(std::move(reg), derive_rule(id, load_script(file)));
  return reg;
}

}  // namespace sqmv::proofkit
