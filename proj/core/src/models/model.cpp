#include "sqmv/models/model.hpp"

#include <algorithm>

#include "sqmv/error.hpp"

namespace sqmv::models {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

}  // namespace

Model::Model(std::string name, Signature sig, Carrier carrier, std::shared_ptr<const Ops> ops,
             std::optional<ClassFlags> declared, Designation designation)
    : name_(std::move(name)),
      sig_(sig),
      carrier_(carrier),
      ops_(std::move(ops)),
      declared_(declared),
      designation_(designation) {
  if (declared_) declared_->sig = sig_;
}

Model::Model(std::string name, FiniteTables tables, std::vector<Element> origin)
    : name_(std::move(name)), sig_(tables.sig), carrier_(Carrier::Finite), origin_(std::move(origin)) {
  std::size_t n = tables.size();
  if (n == 0) throw SpecError("finite model " + name_ + " has an empty carrier");
  if (tables.bin.size() != n * n || tables.un.size() != n || tables.pos.size() != n || tables.negp.size() != n)
    throw SpecError("finite model " + name_ + " has malformed tables");
  auto closed = [&](const std::vector<std::uint32_t>& v) {
    return std::all_of(v.begin(), v.end(), [&](std::uint32_t x) { return x < n; });
  };
  if (!closed(tables.bin) || !closed(tables.un) || !closed(tables.pos) || !closed(tables.negp) ||
      tables.one >= n || (sig_ == Signature::MV && tables.zero >= n))
    throw ClosureError("finite model " + name_ + " has an operation leaving the carrier");
  if (sig_ == Signature::MV && tables.un[tables.zero] != tables.zero)
    throw SpecError("finite model " + name_ + " violates 0 = -0");
  tables_ = std::make_shared<const FiniteTables>(std::move(tables));
}

std::size_t Model::size() const {
  if (!tables_) throw DomainError("model " + name_ + " has an infinite carrier");
  return tables_->size();
}

bool Model::contains(const Element& e) const {
  static const Rational one(1), zero(0);
  auto unit = [&](const Rational& x) { return -one <= x && x <= one; };
  switch (carrier_) {
    case Carrier::Finite: return e.tag == Element::Tag::Index && e.index < tables_->size();
    case Carrier::Interval: return e.tag == Element::Tag::Scalar && unit(e.a);
    case Carrier::Square: return e.tag == Element::Tag::Pair && unit(e.a) && unit(e.b);
    case Carrier::Disk: return e.tag == Element::Tag::Pair && unit(e.a) && unit(e.b) && e.a * e.a + e.b * e.b <= one;
    case Carrier::Half: return e.tag == Element::Tag::Pair && unit(e.a) && zero <= e.b && e.b <= one;
  }
  return false;
}

void Model::require_member(const Element& e) const {
  if (!contains(e)) throw DomainError(format(e) + " is not an element of " + name_);
}

Element Model::unary(Kind op, const Element& x) const {
  if (!tables_) return ops_->unary(op, x);
  const auto& t = *tables_;
  switch (op) {
    case Kind::UMinus:
    case Kind::Neg: return Element::idx(t.un[x.index]);
    case Kind::PosPart: return Element::idx(t.pos[x.index]);
    case Kind::NegPart: return Element::idx(t.negp[x.index]);
    default: throw SignatureError("not a unary connective");
  }
}

Element Model::binary(Kind op, const Element& x, const Element& y) const {
  if (!tables_) return ops_->binary(op, x, y);
  return Element::idx(tables_->b(x.index, y.index));
}

Element Model::constant(Kind op) const {
  if (!tables_) return ops_->constant(op);
  return Element::idx(op == Kind::Zero ? tables_->zero : tables_->one);
}

Element Model::eval_op(Kind op, std::span<const Element> args) const {
  if (op == Kind::Var || !syntax::kind_legal(op, sig_))
    throw SignatureError(std::string(syntax::kind_name(op)) + " is not an operation of " + name_);
  if (args.size() != static_cast<std::size_t>(syntax::kind_arity(op)))
    throw SignatureError("wrong number of arguments for " + std::string(syntax::kind_name(op)));
  for (const auto& a : args) require_member(a);
  Element r = args.empty() ? constant(op) : args.size() == 1 ? unary(op, args[0]) : binary(op, args[0], args[1]);
  require_member(r);
  return r;
}

std::string Model::format(const Element& e) const {
  switch (e.tag) {
    case Element::Tag::Index:
      if (tables_ && e.index < tables_->size()) return tables_->labels[e.index];
      return "#" + std::to_string(e.index);
    case Element::Tag::Scalar: return e.a.str();
    case Element::Tag::Pair: return "<" + e.a.str() + "," + e.b.str() + ">";
  }
  return "?";
}

Element Model::parse_element(std::string_view text) const {
  std::string s = strip(text);
  if (tables_) {
    for (std::size_t i = 0; i < tables_->size(); ++i)
      if (strip(tables_->labels[i]) == s) return element(i);
    throw DomainError("no element labelled " + s + " in " + name_);
  }
  Element e;
  try {
    if (s.size() >= 2 && s.front() == '<' && s.back() == '>') {
      auto comma = s.find(',');
      if (comma == std::string::npos) throw DomainError("malformed pair " + s);
      e = Element::pair(Rational::parse(s.substr(1, comma - 1)),
                        Rational::parse(s.substr(comma + 1, s.size() - comma - 2)));
    } else {
      e = Element::scalar(Rational::parse(s));
    }
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed element " + s);
  }
  require_member(e);
  return e;
}

Element run(const syntax::Program& prog, const Model& m, std::span<const Element> inputs,
            std::vector<Element>& scratch) {
  scratch.resize(prog.slots());
  std::copy(inputs.begin(), inputs.end(), scratch.begin());
  std::size_t slot = prog.vars.size();
  for (const auto& ins : prog.code) {
    switch (syntax::kind_arity(ins.op)) {
      case 0: scratch[slot] = m.constant(ins.op); break;
      case 1: scratch[slot] = m.unary(ins.op, scratch[ins.a]); break;
      default: scratch[slot] = m.binary(ins.op, scratch[ins.a], scratch[ins.b]); break;
    }
    ++slot;
  }
  return scratch[prog.result];
}

std::uint32_t run_indexed(const syntax::Program& prog, const FiniteTables& t,
                          std::span<const std::uint32_t> inputs, std::vector<std::uint32_t>& scratch) {
  scratch.resize(prog.slots());
  std::copy(inputs.begin(), inputs.end(), scratch.begin());
  std::size_t slot = prog.vars.size();
  const std::size_t n = t.size();
  for (const auto& ins : prog.code) {
    std::uint32_t r;
    switch (ins.op) {
      case Kind::OPlus:
      case Kind::Impl: r = t.bin[scratch[ins.a] * n + scratch[ins.b]]; break;
      case Kind::UMinus:
      case Kind::Neg: r = t.un[scratch[ins.a]]; break;
      case Kind::PosPart: r = t.pos[scratch[ins.a]]; break;
      case Kind::NegPart: r = t.negp[scratch[ins.a]]; break;
      case Kind::Zero: r = t.zero; break;
      default: r = t.one; break;
    }
    scratch[slot++] = r;
  }
  return scratch[prog.result];
}

}  // namespace sqmv::models
