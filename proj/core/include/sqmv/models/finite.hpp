#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqmv/models/model.hpp"

namespace sqmv::models {

// Subalgebra of an infinite model on the given elements; ClosureError if
// some operation leaves the subset.
Model restrict(const Model& base, const std::vector<Element>& elements, std::string name);

// {-n/n, ..., 0, ..., n/n} inside the interval.
Model chain(int n);

// k-flattening. `k` names a base element, which must be a fixpoint of -
// inside R(A); the label "new" adjoins a fresh element and is only allowed
// when no such fixpoint exists.
Model flatten(const Model& base, const std::string& k, std::string name);

Model product(const Model& m1, const Model& m2, std::string name);

// Grid {-1,-1/2,0,1/2,1} x {0,1/2,1} of the half-square example.
Model ex32_grid();
// {k/d} x {k/d} grids of the square or disk, ClosureError unless closed.
Model pair_grid(const Model& base, int d, std::string name);

// One line per operation tuple, e.g. "oplus -1 1/2 = -1/2".
std::string export_tables(const Model& m);

}  // namespace sqmv::models
