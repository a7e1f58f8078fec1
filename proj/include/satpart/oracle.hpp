#ifndef SATPART_ORACLE_HPP
#define SATPART_ORACLE_HPP

#include <optional>

#include "satpart/instance.hpp"

namespace satpart {

/// Default brute-force vertex cap; 2^26 assignments worst case.
inline constexpr int kDefaultBruteForceCap = 26;

/// Exhaustive ground-truth solver. Unforced vertices are assigned via a
/// binary counter whose least-significant bit belongs to the lowest-numbered
/// free vertex (bit set = side TWO); the first valid assignment wins, so the
/// returned witness is deterministic. When the instance carries no
/// constraints, vertex 0 is pinned to side ONE (side symmetry).
///
/// Throws CapacityError when graph.n() exceeds `cap`.
std::optional<Partition> brute_force(const FscInstance& inst, bool balanced,
                                     int cap = kDefaultBruteForceCap);

/// Plain SP/BSP on a bare graph.
std::optional<Partition> brute_force_sp(const Graph& g, bool balanced,
                                        int cap = kDefaultBruteForceCap);

}  // namespace satpart

#endif
