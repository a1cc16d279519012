#pragma once

#include <cstdint>
#include <functional>

#include "sqmv/rational.hpp"

namespace sqmv::models {

// A carrier element: a rational pair (square, disk, half-square carriers),
// a rational scalar (interval carriers) or an index into a finite carrier.
struct Element {
  enum class Tag : std::uint8_t { Pair, Scalar, Index };

  Tag tag = Tag::Index;
  std::uint32_t index = 0;
  Rational a, b;

  static Element pair(Rational a, Rational b) { return {Tag::Pair, 0, a, b}; }
  static Element scalar(Rational a) { return {Tag::Scalar, 0, a, Rational(0)}; }
  static Element idx(std::uint32_t i) { return {Tag::Index, i, Rational(0), Rational(0)}; }

  friend bool operator==(const Element& x, const Element& y) = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    return (hash_value(e.a) * 31 + hash_value(e.b)) * 7 + e.index * 3 + static_cast<std::size_t>(e.tag);
  }
};

}  // namespace sqmv::models
