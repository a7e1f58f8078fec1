#include "satpart/reductions.hpp"

#include <algorithm>

#include "satpart/errors.hpp"

namespace satpart {

MmoInstance::MmoInstance(int n, std::vector<WeightedEdge> es, int r_)
    : edges(std::move(es)), r(r_) {
    if (r < 1) throw InputError("outdegree bound r must be positive");
    std::vector<std::pair<int, int>> plain;
    plain.reserve(edges.size());
    for (const WeightedEdge& e : edges) {
        if (e.w < 1) throw InputError("edge weights must be positive");
        if (e.w > kMaxMmoWeight)
            throw InputError("edge weight exceeds the documented cap of " +
                             std::to_string(kMaxMmoWeight));
        plain.emplace_back(e.u, e.v);
    }
    graph = Graph::from_edges(n, plain);  // validates simplicity and ranges
}

int ReductionMap::add(const std::string& name) {
    const int id = total_count();
    insert(name, id);
    return id;
}

void ReductionMap::insert(const std::string& name, int id) {
    internal_check(id == total_count(), "reduction map ids must be appended in order");
    internal_check(by_name_.emplace(name, id).second, "duplicate gadget name");
    names_.push_back(name);
}

int ReductionMap::id_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw InputError("unknown gadget vertex name: " + name);
    return it->second;
}

const std::string& ReductionMap::name_of(int id) const {
    const int idx = id - original_count_;
    if (idx < 0 || idx >= static_cast<int>(names_.size()))
        throw InputError("vertex " + std::to_string(id) + " is not a gadget vertex");
    return names_[static_cast<size_t>(idx)];
}

std::string pendant_name(int v, int i) {
    return "h_" + std::to_string(i) + "^" + std::to_string(v);
}

std::string gadget_name(int u, int v, bool primed, bool square, int i) {
    return std::to_string(u) + (primed ? "'" : "") + "^" + std::to_string(v) +
           (square ? "sq" : "") + "_" + std::to_string(i);
}

std::string pair_tri_name(int a, int b) {
    return "tri^" + std::to_string(a) + "," + std::to_string(b);
}

std::string pair_sq_name(int a, int b) {
    return "sq^" + std::to_string(a) + "," + std::to_string(b);
}

bool check_orientation(const MmoInstance& m, const Orientation& o) {
    if (o.dir.size() != m.edges.size())
        throw InputError("orientation covers " + std::to_string(o.dir.size()) + " edges, instance has " +
                         std::to_string(m.edges.size()));
    std::vector<long long> out(static_cast<size_t>(m.graph.n()), 0);
    for (size_t e = 0; e < m.edges.size(); ++e) {
        const WeightedEdge& we = m.edges[e];
        auto [tail, head] = o.dir[e];
        const bool forward = (tail == we.u && head == we.v);
        const bool backward = (tail == we.v && head == we.u);
        if (!forward && !backward)
            throw InputError("orientation entry " + std::to_string(e) +
                             " does not match the instance edge");
        out[static_cast<size_t>(tail)] += we.w;
    }
    for (long long d : out)
        if (d > m.r) return false;
    return true;
}

namespace {

// Ids of one gadget set of an edge, in member order 1..w.
struct EdgeSets {
    std::vector<int> plain_uv, primed_uv, square_uv, primed_square_uv;
    std::vector<int> plain_vu, primed_vu, square_vu, primed_square_vu;
};

struct MmoReduction {
    FscInstance inst;
    ReductionMap map;
    std::vector<EdgeSets> sets;  // aligned with m.edges
};

MmoReduction build_mmo_reduction(const MmoInstance& m) {
    const int n0 = m.graph.n();
    ReductionMap map(n0);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> forced_one, forced_two;
    std::vector<std::pair<int, int>> pairs;

    for (int v = 0; v < n0; ++v) forced_one.push_back(v);
    for (int v = 0; v < n0; ++v) {
        for (int i = 1; i <= 2 * m.r; ++i) {
            const int h = map.add(pendant_name(v, i));
            edges.emplace_back(v, h);
            forced_one.push_back(h);
        }
    }

    std::vector<EdgeSets> all_sets;
    all_sets.reserve(m.edges.size());
    for (const WeightedEdge& we : m.edges) {
        EdgeSets es;
        auto make_set = [&](std::vector<int>& ids, int a, int b, bool primed, bool square) {
            for (int i = 1; i <= we.w; ++i) ids.push_back(map.add(gadget_name(a, b, primed, square, i)));
        };
        make_set(es.plain_uv, we.u, we.v, false, false);
        make_set(es.primed_uv, we.u, we.v, true, false);
        make_set(es.square_uv, we.u, we.v, false, true);
        make_set(es.primed_square_uv, we.u, we.v, true, true);
        make_set(es.plain_vu, we.v, we.u, false, false);
        make_set(es.primed_vu, we.v, we.u, true, false);
        make_set(es.square_vu, we.v, we.u, false, true);
        make_set(es.primed_square_vu, we.v, we.u, true, true);

        for (int i = 0; i < we.w; ++i) {
            edges.emplace_back(we.u, es.plain_uv[static_cast<size_t>(i)]);
            edges.emplace_back(we.u, es.square_uv[static_cast<size_t>(i)]);
            edges.emplace_back(we.v, es.plain_vu[static_cast<size_t>(i)]);
            edges.emplace_back(we.v, es.square_vu[static_cast<size_t>(i)]);
            edges.emplace_back(es.plain_uv[static_cast<size_t>(i)], es.primed_uv[static_cast<size_t>(i)]);
            edges.emplace_back(es.square_uv[static_cast<size_t>(i)],
                               es.primed_square_uv[static_cast<size_t>(i)]);
            edges.emplace_back(es.plain_vu[static_cast<size_t>(i)], es.primed_vu[static_cast<size_t>(i)]);
            edges.emplace_back(es.square_vu[static_cast<size_t>(i)],
                               es.primed_square_vu[static_cast<size_t>(i)]);
        }
        for (int id : es.square_uv) forced_two.push_back(id);
        for (int id : es.primed_square_uv) forced_two.push_back(id);
        for (int id : es.square_vu) forced_two.push_back(id);
        for (int id : es.primed_square_vu) forced_two.push_back(id);

        // Complementary pairs; the (i+1, i) family stops at w-1 to stay
        // within the defined members.
        for (int i = 0; i < we.w; ++i) {
            pairs.emplace_back(es.primed_uv[static_cast<size_t>(i)], es.primed_vu[static_cast<size_t>(i)]);
            pairs.emplace_back(es.plain_uv[static_cast<size_t>(i)], es.primed_vu[static_cast<size_t>(i)]);
            pairs.emplace_back(es.primed_uv[static_cast<size_t>(i)], es.plain_vu[static_cast<size_t>(i)]);
            if (i + 1 < we.w)
                pairs.emplace_back(es.primed_uv[static_cast<size_t>(i + 1)],
                                   es.primed_vu[static_cast<size_t>(i)]);
        }
        all_sets.push_back(std::move(es));
    }

    Graph g = Graph::from_edges(map.total_count(), edges);
    return MmoReduction{FscInstance(std::move(g), std::move(forced_one), std::move(forced_two),
                                    std::move(pairs)),
                        std::move(map), std::move(all_sets)};
}

}  // namespace

std::pair<FscInstance, ReductionMap> reduce_mmo_to_fsc(const MmoInstance& m) {
    MmoReduction red = build_mmo_reduction(m);
    return {std::move(red.inst), std::move(red.map)};
}

Partition orientation_to_partition(const MmoInstance& m, const Orientation& o,
                                   const ReductionMap& map) {
    // With no edges the reduced instance has every vertex forced to V1 and
    // no material for a nontrivial V2; the witness mapping is undefined there.
    if (m.edges.empty())
        throw InputError("witness mapping needs an instance with at least one edge");
    if (!check_orientation(m, o)) throw InputError("orientation violates the outdegree bound");
    MmoReduction red = build_mmo_reduction(m);
    internal_check(red.map.total_count() == map.total_count(), "reduction map mismatch");

    std::vector<int> ones;
    for (int v : red.inst.forced_one) ones.push_back(v);
    for (size_t e = 0; e < m.edges.size(); ++e) {
        // Edge oriented tail->head: the head-attached plain sets join V1.
        const bool forward = (o.dir[e].first == m.edges[e].u);
        const EdgeSets& es = red.sets[e];
        const auto& plain = forward ? es.plain_vu : es.plain_uv;
        const auto& primed = forward ? es.primed_vu : es.primed_uv;
        ones.insert(ones.end(), plain.begin(), plain.end());
        ones.insert(ones.end(), primed.begin(), primed.end());
    }
    Partition p = Partition::from_side_one(red.inst.graph.n(), ones);
    internal_check(is_valid_fsc_solution(red.inst, p),
                   "orientation witness failed FSC validation");
    return p;
}

Orientation partition_to_orientation(const MmoInstance& m, const ReductionMap& map,
                                     const Partition& p) {
    MmoReduction red = build_mmo_reduction(m);
    internal_check(red.map.total_count() == map.total_count(), "reduction map mismatch");
    if (!is_valid_fsc_solution(red.inst, p))
        throw InputError("partition is not a valid solution of the reduced instance");

    auto all_one = [&](const std::vector<int>& ids) {
        return std::all_of(ids.begin(), ids.end(),
                           [&](int v) { return p.side(v) == Side::One; });
    };
    Orientation o;
    o.dir.reserve(m.edges.size());
    for (size_t e = 0; e < m.edges.size(); ++e) {
        const EdgeSets& es = red.sets[e];
        const bool head_v = all_one(es.plain_vu) && all_one(es.primed_vu);
        const bool head_u = all_one(es.plain_uv) && all_one(es.primed_uv);
        internal_check(head_v != head_u, "complementary pairs did not fix the edge direction");
        if (head_v)
            o.dir.emplace_back(m.edges[e].u, m.edges[e].v);
        else
            o.dir.emplace_back(m.edges[e].v, m.edges[e].u);
    }
    internal_check(check_orientation(m, o), "extracted orientation violates the bound");
    return o;
}

std::pair<FscInstance, ReductionMap> reduce_fsc_to_fs(const FscInstance& inst) {
    const int n0 = inst.graph.n();
    ReductionMap map(n0);
    auto edges = inst.graph.edges();
    std::vector<int> forced_one = inst.forced_one;
    std::vector<int> forced_two = inst.forced_two;
    for (auto [a, b] : inst.pairs) {
        const int tri = map.add(pair_tri_name(a, b));
        const int sq = map.add(pair_sq_name(a, b));
        edges.emplace_back(a, tri);
        edges.emplace_back(b, tri);
        edges.emplace_back(a, sq);
        edges.emplace_back(b, sq);
        forced_one.push_back(tri);
        forced_two.push_back(sq);
    }
    Graph g = Graph::from_edges(map.total_count(), edges);
    return {FscInstance(std::move(g), std::move(forced_one), std::move(forced_two), {}),
            std::move(map)};
}

Partition lift_fs_solution(const FscInstance& fsc, const ReductionMap& map,
                           const Partition& p_fs) {
    auto [fs_inst, fs_map] = reduce_fsc_to_fs(fsc);
    internal_check(fs_map.total_count() == map.total_count(), "reduction map mismatch");
    if (!is_valid_fsc_solution(fs_inst, p_fs))
        throw InputError("partition is not a valid solution of the FS instance");
    std::vector<int> ones;
    for (int v = 0; v < fsc.graph.n(); ++v)
        if (p_fs.side(v) == Side::One) ones.push_back(v);
    Partition p = Partition::from_side_one(fsc.graph.n(), ones);
    internal_check(is_valid_fsc_solution(fsc, p), "restricted witness failed FSC validation");
    return p;
}

Partition project_fsc_solution(const FscInstance& fsc, const ReductionMap& map,
                               const Partition& p_fsc) {
    auto [fs_inst, fs_map] = reduce_fsc_to_fs(fsc);
    internal_check(fs_map.total_count() == map.total_count(), "reduction map mismatch");
    if (!is_valid_fsc_solution(fsc, p_fsc))
        throw InputError("partition is not a valid solution of the FSC instance");
    std::vector<int> ones;
    for (int v = 0; v < fsc.graph.n(); ++v)
        if (p_fsc.side(v) == Side::One) ones.push_back(v);
    for (int v : fs_inst.forced_one)
        if (v >= fsc.graph.n()) ones.push_back(v);
    Partition p = Partition::from_side_one(fs_inst.graph.n(), ones);
    internal_check(is_valid_fsc_solution(fs_inst, p), "extended witness failed FS validation");
    return p;
}

Graph primal_graph(const FscInstance& inst) {
    auto edges = inst.graph.edges();
    for (auto [a, b] : inst.pairs)
        if (!inst.graph.has_edge(a, b)) edges.emplace_back(a, b);
    return Graph::from_edges(inst.graph.n(), edges);
}

}  // namespace satpart
