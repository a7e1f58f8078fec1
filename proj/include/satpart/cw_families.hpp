#ifndef SATPART_CW_FAMILIES_HPP
#define SATPART_CW_FAMILIES_HPP

#include "satpart/cexpr.hpp"

namespace satpart {

// Irredundant expressions whose vertex numbering matches generate_family,
// so eval_cexpr(cexpr_X(...)).graph equals the corresponding graph.

/// Path 0-1-...-(n-1). Three labels (settled 1, current end 2, fresh 3);
/// paths on >= 4 vertices need all three.
CExpr cexpr_path(int n);

/// Cycle 0-1-...-(n-1)-0, n >= 3. Four labels (settled 1, anchor 2, current
/// end 3, fresh 4); long cycles need all four.
CExpr cexpr_cycle(int n);

/// Complete graph K_n. Two labels.
CExpr cexpr_clique(int n);

/// Complete bipartite K_{a,b}, part A = 0..a-1, part B = a..a+b-1. Two labels.
CExpr cexpr_complete_bipartite(int a, int b);

}  // namespace satpart

#endif
