#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sqmv::syntax {

enum class Signature : std::uint8_t { MV, W };

enum class Kind : std::uint8_t { Var, Zero, One, OPlus, UMinus, Impl, Neg, PosPart, NegPart };

std::string_view signature_name(Signature s);
std::string_view kind_name(Kind k);
int kind_arity(Kind k);
bool kind_legal(Kind k, Signature s);

// Immutable, structurally shared syntax tree. Equality is structural.
class Term {
 public:
  Term() = default;  // empty handle; only useful as a placeholder

  static Term var(std::string name);
  static Term zero();
  static Term one();
  static Term oplus(Term l, Term r);
  static Term uminus(Term a);
  static Term impl(Term l, Term r);
  static Term neg(Term a);
  static Term pos(Term a);
  static Term negpart(Term a);
  static Term make(Kind k, Term a = {}, Term b = {});

  bool empty() const { return !n_; }
  Kind kind() const;
  const std::string& name() const;
  // For unary kinds the operand is child(0); for binary, left = child(0).
  const Term& child(int i) const;
  const Term& arg() const { return child(0); }
  const Term& left() const { return child(0); }
  const Term& right() const { return child(1); }
  int arity() const { return kind_arity(kind()); }
  std::size_t size() const;
  std::size_t hash() const;
  bool same_node(const Term& o) const { return n_ == o.n_; }

  friend bool operator==(const Term& x, const Term& y);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct Term::Node {
  Kind kind;
  std::string name;
  Term a, b;
  std::size_t hash;
  std::size_t size;
};

inline Kind Term::kind() const { return n_->kind; }
inline const std::string& Term::name() const { return n_->name; }
inline const Term& Term::child(int i) const { return i == 0 ? n_->a : n_->b; }
inline std::size_t Term::size() const { return n_->size; }
inline std::size_t Term::hash() const { return n_->hash; }

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

bool conforms(const Term& t, Signature s);
void require_signature(const Term& t, Signature s);  // throws SignatureError
// Signature implied by the connectives used, if any are signature-specific.
std::optional<Signature> implied_signature(const Term& t);

std::set<std::string> variables(const Term& t);
std::size_t count_connective(const Term& t, Kind k);
bool is_regular(const Term& t);
bool has_abbreviations(const Term& t);

// Positions: child indices from the root (0 = operand / left, 1 = right).
using Path = std::vector<int>;
const Term& subterm_at(const Term& t, const Path& p);  // throws PathMismatch
Term replace_at(const Term& t, const Path& p, const Term& replacement);
std::vector<Path> occurrences(const Term& t, const Term& target);  // pre-order

}  // namespace sqmv::syntax
