#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sqmv/models/model.hpp"

namespace sqmv::models {

// Partition of a finite carrier; classes are numbered by first member.
struct Congruence {
  std::vector<std::uint32_t> class_of;
  std::size_t classes = 0;

  bool related(std::uint32_t x, std::uint32_t y) const { return class_of[x] == class_of[y]; }
  bool operator==(const Congruence&) const = default;

  static Congruence identity(std::size_t n);
  static Congruence all(std::size_t n);
  // NotCompatible unless `rel` is an equivalence relation.
  static Congruence from_relation(std::size_t n, const std::function<bool(std::uint32_t, std::uint32_t)>& rel);
};

Congruence meet(const Congruence& a, const Congruence& b);

bool is_compatible(const Model& m, const Congruence& theta);

// x mu y iff x <= y and y <= x, where x <= y iff x \/ y = y (+) 0.
Congruence mu_congruence(const Model& m);
// x tau y iff x = y or both are regular.
Congruence tau_congruence(const Model& m);

// NotCompatible if theta does not respect the operations.
Model quotient(const Model& m, const Congruence& theta, std::string name = {});

struct Embedding {
  Congruence mu, tau;
  Model target;                       // (m/mu) x (m/tau)
  std::vector<std::uint32_t> image;   // x -> <x/mu, x/tau>
  bool is_homomorphism = false;
  bool is_injective = false;
  bool is_surjective = false;
  bool is_isomorphism = false;
};

// ClassError unless m is a finite strong quasi algebra.
Embedding embed_into_product(const Model& m);

}  // namespace sqmv::models
