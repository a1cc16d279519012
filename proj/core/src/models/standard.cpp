#include "sqmv/models/standard.hpp"

#include "sqmv/error.hpp"

namespace sqmv::models {

namespace {

const Rational kZero(0), kOne(1), kHalf(1, 2);

Rational pos(const Rational& a) { return rmax(kZero, a); }
Rational negp(const Rational& a) { return rmin(kZero, a); }

[[noreturn]] void bad_op() { throw SignatureError("operation not available in this model"); }

// S* and D*: the second coordinate is wiped by every operation except -.
struct PairOps : Model::Ops {
  Element unary(Kind op, const Element& x) const override {
    switch (op) {
      case Kind::UMinus: return Element::pair(-x.a, -x.b);
      case Kind::PosPart: return Element::pair(pos(x.a), kZero);
      case Kind::NegPart: return Element::pair(negp(x.a), kZero);
      default: bad_op();
    }
  }
  Element binary(Kind op, const Element& x, const Element& y) const override {
    if (op != Kind::OPlus) bad_op();
    return Element::pair(clamp_unit(x.a + y.a), kZero);
  }
  Element constant(Kind op) const override {
    return Element::pair(op == Kind::One ? kOne : kZero, kZero);
  }
};

// SW* and DW*.
struct PairWOps : Model::Ops {
  Element unary(Kind op, const Element& x) const override {
    switch (op) {
      case Kind::Neg: return Element::pair(-x.a, -x.b);
      case Kind::PosPart: return Element::pair(pos(x.a), kZero);
      case Kind::NegPart: return Element::pair(negp(x.a), kZero);
      default: bad_op();
    }
  }
  Element binary(Kind op, const Element& x, const Element& y) const override {
    if (op != Kind::Impl) bad_op();
    return Element::pair(clamp_unit(y.a - x.a), kZero);
  }
  Element constant(Kind op) const override {
    if (op != Kind::One) bad_op();
    return Element::pair(kOne, kZero);
  }
};

struct IntervalOps : Model::Ops {
  Element unary(Kind op, const Element& x) const override {
    switch (op) {
      case Kind::UMinus: return Element::scalar(-x.a);
      case Kind::PosPart: return Element::scalar(pos(x.a));
      case Kind::NegPart: return Element::scalar(negp(x.a));
      default: bad_op();
    }
  }
  Element binary(Kind op, const Element& x, const Element& y) const override {
    if (op != Kind::OPlus) bad_op();
    return Element::scalar(clamp_unit(x.a + y.a));
  }
  Element constant(Kind op) const override { return Element::scalar(op == Kind::One ? kOne : kZero); }
};

struct FlatStandardOps : Model::Ops {
  Element unary(Kind op, const Element& x) const override {
    if (op == Kind::UMinus) return Element::scalar(-x.a);
    if (op == Kind::PosPart || op == Kind::NegPart) return Element::scalar(kZero);
    bad_op();
  }
  Element binary(Kind op, const Element&, const Element&) const override {
    if (op != Kind::OPlus) bad_op();
    return Element::scalar(kZero);
  }
  Element constant(Kind) const override { return Element::scalar(kZero); }
};

// Second coordinate pinned to 1/2 by every operation except -, which maps
// b to 1 - b.
struct HalfOps : Model::Ops {
  Element unary(Kind op, const Element& x) const override {
    switch (op) {
      case Kind::UMinus: return Element::pair(-x.a, kOne - x.b);
      case Kind::PosPart: return Element::pair(pos(x.a), kHalf);
      case Kind::NegPart: return Element::pair(negp(x.a), kHalf);
      default: bad_op();
    }
  }
  Element binary(Kind op, const Element& x, const Element& y) const override {
    if (op != Kind::OPlus) bad_op();
    return Element::pair(clamp_unit(x.a + y.a), kHalf);
  }
  Element constant(Kind op) const override {
    return Element::pair(op == Kind::One ? kOne : kZero, kHalf);
  }
};

struct WViewOps : Model::Ops {
  Model base;
  explicit WViewOps(Model b) : base(std::move(b)) {}
  Element unary(Kind op, const Element& x) const override {
    return base.unary(op == Kind::Neg ? Kind::UMinus : op, x);
  }
  Element binary(Kind, const Element& x, const Element& y) const override {
    return base.binary(Kind::OPlus, base.unary(Kind::UMinus, x), y);
  }
  Element constant(Kind) const override { return base.constant(Kind::One); }
};

struct MvViewOps : Model::Ops {
  Model base;
  explicit MvViewOps(Model b) : base(std::move(b)) {}
  Element unary(Kind op, const Element& x) const override {
    return base.unary(op == Kind::UMinus ? Kind::Neg : op, x);
  }
  Element binary(Kind, const Element& x, const Element& y) const override {
    return base.binary(Kind::Impl, base.unary(Kind::Neg, x), y);
  }
  Element constant(Kind op) const override {
    Element one = base.constant(Kind::One);
    return op == Kind::One ? one : base.binary(Kind::Impl, one, one);
  }
};

ClassFlags flags(Signature sig, bool quasi, bool strong, bool flat, bool standard) {
  return ClassFlags{sig, quasi, strong, flat, standard};
}

}  // namespace

Model square() {
  return Model("square", Signature::MV, Carrier::Square, std::make_shared<PairOps>(),
               flags(Signature::MV, true, true, false, false), Designation::PairCone);
}

Model disk() {
  return Model("disk", Signature::MV, Carrier::Disk, std::make_shared<PairOps>(),
               flags(Signature::MV, true, true, false, false), Designation::PairCone);
}

Model interval() {
  return Model("interval", Signature::MV, Carrier::Interval, std::make_shared<IntervalOps>(),
               flags(Signature::MV, true, true, false, true), Designation::ScalarCone);
}

Model flat_standard() {
  return Model("flat-standard", Signature::MV, Carrier::Interval, std::make_shared<FlatStandardOps>(),
               flags(Signature::MV, true, true, true, false), Designation::ScalarZero);
}

Model ex32() {
  return Model("ex32", Signature::MV, Carrier::Half, std::make_shared<HalfOps>(),
               flags(Signature::MV, true, true, false, false), Designation::HalfPairCone);
}

Model square_w() {
  return Model("square@w", Signature::W, Carrier::Square, std::make_shared<PairWOps>(),
               flags(Signature::W, true, true, false, false), Designation::PairCone);
}

Model disk_w() {
  return Model("disk@w", Signature::W, Carrier::Disk, std::make_shared<PairWOps>(),
               flags(Signature::W, true, true, false, false), Designation::PairCone);
}

Model w_view(const Model& m, std::string name) {
  if (m.signature() != Signature::MV) throw SignatureError(m.name() + " is not in the mv signature");
  if (const FiniteTables* t = m.tables()) {
    FiniteTables w = *t;
    w.sig = Signature::W;
    std::size_t n = t->size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) w.bin[x * n + y] = t->b(t->un[x], static_cast<std::uint32_t>(y));
    w.zero = 0;
    return Model(std::move(name), std::move(w), m.origin());
  }
  auto declared = m.declared_flags();
  if (declared) declared->sig = Signature::W;
  return Model(std::move(name), Signature::W, m.carrier(), std::make_shared<WViewOps>(m), declared, m.designation());
}

Model mv_view(const Model& m, std::string name) {
  if (m.signature() != Signature::W) throw SignatureError(m.name() + " is not in the w signature");
  if (const FiniteTables* t = m.tables()) {
    FiniteTables v = *t;
    v.sig = Signature::MV;
    std::size_t n = t->size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) v.bin[x * n + y] = t->b(t->un[x], static_cast<std::uint32_t>(y));
    v.zero = t->b(t->one, t->one);
    return Model(std::move(name), std::move(v), m.origin());
  }
  auto declared = m.declared_flags();
  if (declared) declared->sig = Signature::MV;
  return Model(std::move(name), Signature::MV, m.carrier(), std::make_shared<MvViewOps>(m), declared, m.designation());
}

}  // namespace sqmv::models
