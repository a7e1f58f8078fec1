#ifndef SATPART_INSTANCE_HPP
#define SATPART_INSTANCE_HPP

#include <utility>
#include <vector>

#include "satpart/graph.hpp"

namespace satpart {

/// Satisfactory-partition instance with forced sides and complementary pairs.
/// forced_one / forced_two are the vertices pinned to V1 / V2; of each pair
/// exactly one endpoint must end up in V1. With pairs empty this is an FS
/// instance; with everything empty it is a plain SP instance.
///
/// Forced sets must be disjoint, but a pair may have both endpoints inside
/// one forced set: such instances are representable and simply have no
/// solution.
struct FscInstance {
    Graph graph;
    std::vector<int> forced_one;                 // sorted, deduplicated
    std::vector<int> forced_two;                 // sorted, deduplicated
    std::vector<std::pair<int, int>> pairs;      // normalized (a<b), sorted, deduplicated

    FscInstance() = default;
    explicit FscInstance(Graph g) : graph(std::move(g)) {}
    FscInstance(Graph g, std::vector<int> one, std::vector<int> two,
                std::vector<std::pair<int, int>> prs);

    bool is_plain() const { return forced_one.empty() && forced_two.empty() && pairs.empty(); }

    bool operator==(const FscInstance& other) const = default;
};

/// Nontrivial satisfactory partition that honors forced sides and puts
/// exactly one endpoint of every pair into V1.
bool is_valid_fsc_solution(const FscInstance& inst, const Partition& p);

}  // namespace satpart

#endif
