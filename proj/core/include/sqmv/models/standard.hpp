#pragma once

#include "sqmv/models/model.hpp"

namespace sqmv::models {

Model square();         // S*
Model disk();           // D*
Model interval();       // MV*_[-1,1]
Model flat_standard();  // 0-flattening of the interval
Model ex32();           // [-1,1]x[0,1], strong but not MV*
Model square_w();       // SW*, native implication
Model disk_w();         // DW*

// Derived-operation views over the same carrier:
//   w_view:  x -> y = -x (+) y,  ~x = -x
//   mv_view: x (+) y = ~x -> y,  -x = ~x,  0 = 1 -> 1
// Finite inputs give finite tables; infinite inputs wrap the closed forms.
Model w_view(const Model& m, std::string name);
Model mv_view(const Model& m, std::string name);

}  // namespace sqmv::models
