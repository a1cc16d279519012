#pragma once

#include "sqmv/models/model.hpp"
#include "sqmv/syntax/term.hpp"

namespace sqmv::transform {

// x (+) y -> ~x -> y,  -x -> ~x,  0 -> 1 -> 1.  ^+/^- pass through.
syntax::Term mv_to_w_term(const syntax::Term& t);
// x -> y -> -x (+) y,  ~x -> -x.
syntax::Term w_to_mv_term(const syntax::Term& t);

// f and g on models. Finite inputs are classified exhaustively, infinite
// ones must carry declared flags; either way the input has to be strong
// (ClassError otherwise).
models::Model mv_to_w_model(const models::Model& m);
models::Model w_to_mv_model(const models::Model& m);

}  // namespace sqmv::transform
