#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqmv/models/element.hpp"
#include "sqmv/syntax/program.hpp"
#include "sqmv/syntax/term.hpp"

namespace sqmv::models {

using syntax::Kind;
using syntax::Signature;

// SQUARE: [-1,1]^2.  DISK: a^2+b^2 <= 1.  HALF: [-1,1]x[0,1] (the
// non-MV* example).  INTERVAL: [-1,1] scalars.  FINITE: table-driven.
enum class Carrier : std::uint8_t { Square, Disk, Half, Interval, Finite };

// Closed forms of the designated set {(c->1)->1} for infinite carriers.
enum class Designation : std::uint8_t {
  Computed,      // finite: enumerate
  PairCone,      // <a,0>, a >= 0
  HalfPairCone,  // <a,1/2>, a >= 0
  ScalarCone,    // a >= 0
  ScalarZero,    // {0}
};

struct ClassFlags {
  Signature sig = Signature::MV;
  bool quasi = false;     // quasi-MV* / quasi-W*
  bool strong = false;    // Def of strong: x^+ = x^+ (+) 0, x^- = x^- (+) 0 (or the W forms)
  bool flat = false;      // 0 = 1
  bool standard = false;  // MV* / Wajsberg*
};

struct FiniteTables {
  Signature sig = Signature::MV;
  std::vector<std::string> labels;
  std::vector<std::uint32_t> bin;  // n*n, (+) or ->, row = left argument
  std::vector<std::uint32_t> un;   // - or ~
  std::vector<std::uint32_t> pos, negp;
  std::uint32_t zero = 0;  // meaningful for MV only
  std::uint32_t one = 0;

  std::size_t size() const { return labels.size(); }
  std::uint32_t b(std::uint32_t x, std::uint32_t y) const { return bin[x * labels.size() + y]; }
  bool operator==(const FiniteTables& o) const = default;
};

class Model {
 public:
  // Closed-form operations for infinite carriers.
  struct Ops {
    virtual ~Ops() = default;
    virtual Element unary(Kind op, const Element& x) const = 0;
    virtual Element binary(Kind op, const Element& x, const Element& y) const = 0;
    virtual Element constant(Kind op) const = 0;
  };

  Model(std::string name, Signature sig, Carrier carrier, std::shared_ptr<const Ops> ops,
        std::optional<ClassFlags> declared, Designation designation);
  // Validates table shape and closure (ClosureError) and that 0 = -0 holds
  // for mv tables (SpecError).
  Model(std::string name, FiniteTables tables, std::vector<Element> origin = {});

  const std::string& name() const { return name_; }
  Signature signature() const { return sig_; }
  Carrier carrier() const { return carrier_; }
  bool is_finite() const { return carrier_ == Carrier::Finite; }
  std::size_t size() const;
  Element element(std::size_t i) const { return Element::idx(static_cast<std::uint32_t>(i)); }
  const FiniteTables* tables() const { return tables_.get(); }
  // Elements of the infinite model a restricted finite model was cut from.
  const std::vector<Element>& origin() const { return origin_; }
  std::optional<ClassFlags> declared_flags() const { return declared_; }
  Designation designation() const { return designation_; }

  bool contains(const Element& e) const;
  void require_member(const Element& e) const;  // DomainError

  // Unchecked primitives (arguments assumed to be members).
  Element unary(Kind op, const Element& x) const;
  Element binary(Kind op, const Element& x, const Element& y) const;
  Element constant(Kind op) const;

  // Checked application: op legal for the signature, arguments members.
  Element eval_op(Kind op, std::span<const Element> args) const;

  std::string format(const Element& e) const;
  Element parse_element(std::string_view text) const;  // DomainError on failure

 private:
  std::string name_;
  Signature sig_;
  Carrier carrier_;
  std::shared_ptr<const Ops> ops_;
  std::shared_ptr<const FiniteTables> tables_;
  std::vector<Element> origin_;
  std::optional<ClassFlags> declared_;
  Designation designation_ = Designation::Computed;
};

// Straight-line evaluation of a compiled program. `inputs` follow prog.vars.
Element run(const syntax::Program& prog, const Model& m, std::span<const Element> inputs,
            std::vector<Element>& scratch);
std::uint32_t run_indexed(const syntax::Program& prog, const FiniteTables& t,
                          std::span<const std::uint32_t> inputs, std::vector<std::uint32_t>& scratch);

}  // namespace sqmv::models
