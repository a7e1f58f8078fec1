#include "satpart/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "satpart/errors.hpp"

namespace satpart {

namespace {

// Adjacency as bitmasks; the enumeration below only needs popcounts.
std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> mask(static_cast<size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v)) mask[static_cast<size_t>(v)] |= std::uint64_t{1} << w;
    return mask;
}

}  // namespace

std::optional<Partition> brute_force(const FscInstance& inst, bool balanced, int cap) {
    const Graph& g = inst.graph;
    const int n = g.n();
    if (cap < 0 || cap > 62) throw InputError("brute-force cap must be in [0,62]");
    if (n > cap)
        throw CapacityError("instance has " + std::to_string(n) +
                            " vertices, above the brute-force cap of " + std::to_string(cap));
    if (n < 2) return std::nullopt;
    if (balanced && n % 2 != 0) return std::nullopt;

    const auto adj = adjacency_masks(g);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;

    std::uint64_t forced_two_mask = 0;
    std::vector<bool> is_forced(static_cast<size_t>(n), false);
    for (int v : inst.forced_one) is_forced[static_cast<size_t>(v)] = true;
    for (int v : inst.forced_two) {
        is_forced[static_cast<size_t>(v)] = true;
        forced_two_mask |= std::uint64_t{1} << v;
    }

    // Side symmetry: with no constraints at all, pin vertex 0 to ONE.
    if (inst.is_plain()) is_forced[0] = true;

    std::vector<int> free_ids;
    for (int v = 0; v < n; ++v)
        if (!is_forced[static_cast<size_t>(v)]) free_ids.push_back(v);
    const int f = static_cast<int>(free_ids.size());

    const int half = n / 2;
    for (std::uint64_t counter = 0; counter < (std::uint64_t{1} << f); ++counter) {
        std::uint64_t two = forced_two_mask;
        for (int i = 0; i < f; ++i)
            if (counter >> i & 1) two |= std::uint64_t{1} << free_ids[static_cast<size_t>(i)];
        const std::uint64_t one = all & ~two;
        if (one == 0 || two == 0) continue;
        if (balanced && std::popcount(one) != half) continue;

        bool ok = true;
        for (auto [a, b] : inst.pairs) {
            if (((one >> a & 1) ^ (one >> b & 1)) == 0) {
                ok = false;
                break;
            }
        }
        for (int v = 0; ok && v < n; ++v) {
            const std::uint64_t own_mask = (one >> v & 1) ? one : two;
            const int own = std::popcount(adj[static_cast<size_t>(v)] & own_mask);
            ok = 2 * own >= g.degree(v);
        }
        if (!ok) continue;

        std::vector<int> ones;
        for (int v = 0; v < n; ++v)
            if (one >> v & 1) ones.push_back(v);
        Partition p = Partition::from_side_one(n, ones);
        internal_check(is_valid_fsc_solution(inst, p), "brute-force witness failed validation");
        internal_check(!balanced || p.is_balanced(), "brute-force witness not balanced");
        return p;
    }
    return std::nullopt;
}

std::optional<Partition> brute_force_sp(const Graph& g, bool balanced, int cap) {
    return brute_force(FscInstance(g), balanced, cap);
}

}  // namespace satpart
