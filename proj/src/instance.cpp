#include "satpart/instance.hpp"

#include <algorithm>

#include "satpart/errors.hpp"

namespace satpart {

namespace {

std::vector<int> canonical_set(const Graph& g, std::vector<int> vs) {
    for (int v : vs) g.check_vertex(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

}  // namespace

FscInstance::FscInstance(Graph g, std::vector<int> one, std::vector<int> two,
                         std::vector<std::pair<int, int>> prs)
    : graph(std::move(g)) {
    forced_one = canonical_set(graph, std::move(one));
    forced_two = canonical_set(graph, std::move(two));
    for (int v : forced_one)
        if (std::binary_search(forced_two.begin(), forced_two.end(), v))
            throw InputError("vertex " + std::to_string(v) + " forced to both sides");
    for (auto& [a, b] : prs) {
        graph.check_vertex(a);
        graph.check_vertex(b);
        if (a == b) throw InputError("complementary pair with identical endpoints");
        if (a > b) std::swap(a, b);
    }
    std::sort(prs.begin(), prs.end());
    prs.erase(std::unique(prs.begin(), prs.end()), prs.end());
    pairs = std::move(prs);
}

bool is_valid_fsc_solution(const FscInstance& inst, const Partition& p) {
    if (p.size() != inst.graph.n()) throw InputError("partition size does not match instance");
    for (int v : inst.forced_one)
        if (p.side(v) != Side::One) return false;
    for (int v : inst.forced_two)
        if (p.side(v) != Side::Two) return false;
    for (auto [a, b] : inst.pairs)
        if ((p.side(a) == Side::One) == (p.side(b) == Side::One)) return false;
    return is_satisfactory(inst.graph, p, /*require_nontrivial=*/true);
}

}  // namespace satpart
