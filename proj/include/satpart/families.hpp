#ifndef SATPART_FAMILIES_HPP
#define SATPART_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "satpart/graph.hpp"

namespace satpart {

enum class Family { Complete, Star, Cycle, Path, CompleteBipartite, CompleteMultipartite };

/// Canonical vertex numbering per family:
///   Complete [n]              K_n, vertices 0..n-1
///   Star [m]                  K_{1,m}: center 0, leaves 1..m
///   Cycle [n]                 0-1-...-(n-1)-0, n >= 3
///   Path [n]                  0-1-...-(n-1)
///   CompleteBipartite [a,b]   part A = 0..a-1, part B = a..a+b-1
///   CompleteMultipartite [s1,...,sk]  consecutive blocks of the given sizes
Graph generate_family(Family family, const std::vector<int>& params);

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);

}  // namespace satpart

#endif
