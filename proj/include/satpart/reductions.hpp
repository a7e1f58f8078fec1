#ifndef SATPART_REDUCTIONS_HPP
#define SATPART_REDUCTIONS_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "satpart/instance.hpp"

namespace satpart {

/// Weighted edge of a Minimum Maximum Outdegree instance. The stored (u,v)
/// order is the input order and fixes the gadget naming in the reduction.
struct WeightedEdge {
    int u = 0;
    int v = 0;
    int w = 1;

    bool operator==(const WeightedEdge&) const = default;
};

/// Maximum admissible edge weight. Weights are conceptually unary; the cap
/// keeps reduced instances at desk scale.
inline constexpr int kMaxMmoWeight = 64;

/// Minimum Maximum Outdegree instance: orient every edge so each vertex's
/// weighted outdegree stays <= r.
struct MmoInstance {
    Graph graph;
    std::vector<WeightedEdge> edges;
    int r = 1;

    MmoInstance() = default;
    MmoInstance(int n, std::vector<WeightedEdge> es, int r_);

    bool operator==(const MmoInstance&) const = default;
};

/// One direction per instance edge, aligned with MmoInstance::edges.
struct Orientation {
    std::vector<std::pair<int, int>> dir;  // (tail, head)

    bool operator==(const Orientation&) const = default;
};

/// Name table for gadget vertices created by a reduction. Original vertices
/// keep their ids and are not listed. Names:
///   h_i^v        pendant i of vertex v            "h_<i>^<v>"
///   u_i^v        member i of V_uv                 "<u>^<v>_<i>"
///   u'_i^v       member i of V'_uv                "<u>'^<v>_<i>"
///   square sets  V_uv-square / V'_uv-square       "<u>^<v>sq_<i>" / "<u>'^<v>sq_<i>"
///   pair gadgets triangle / square for pair (a,b) "tri^<a>,<b>" / "sq^<a>,<b>"
class ReductionMap {
public:
    explicit ReductionMap(int original_count = 0) : original_count_(original_count) {}

    int add(const std::string& name);  // assigns the next id
    void insert(const std::string& name, int id);
    int id_of(const std::string& name) const;
    const std::string& name_of(int id) const;  // id must be a gadget vertex
    bool has(const std::string& name) const { return by_name_.count(name) > 0; }

    int original_count() const { return original_count_; }
    int total_count() const { return original_count_ + static_cast<int>(names_.size()); }
    const std::vector<std::string>& gadget_names() const { return names_; }

private:
    int original_count_ = 0;
    std::vector<std::string> names_;  // names_[i] is vertex original_count_+i
    std::unordered_map<std::string, int> by_name_;
};

std::string pendant_name(int v, int i);
std::string gadget_name(int u, int v, bool primed, bool square, int i);
std::string pair_tri_name(int a, int b);
std::string pair_sq_name(int a, int b);

/// True iff the orientation covers exactly the instance edges and every
/// weighted outdegree is <= r. Mismatched edges are an input error.
bool check_orientation(const MmoInstance& m, const Orientation& o);

/// The MMO -> SP-FSC gadget reduction. Per vertex: 2r forced-V1 pendants;
/// per edge (u,v) of weight w: eight w-sized vertex sets (plain and primed,
/// each with a forced-V2 square copy), stars from u and v onto their plain
/// and square sets, matchings between plain and primed sets, and 4w-1
/// complementary pairs binding the two directions.
std::pair<FscInstance, ReductionMap> reduce_mmo_to_fsc(const MmoInstance& m);

/// Witness for the reduced instance of a valid orientation: forced-V1
/// vertices plus, per edge oriented u->v, the head-attached sets V_vu and
/// V'_vu. Validity of the result is asserted.
Partition orientation_to_partition(const MmoInstance& m, const Orientation& o,
                                   const ReductionMap& map);

/// Reads the orientation back out of a valid reduced-instance solution:
/// edge (u,v) is oriented u->v when V_vu and V'_vu sit in V1. Asserts the
/// extracted orientation passes check_orientation.
Orientation partition_to_orientation(const MmoInstance& m, const ReductionMap& map,
                                     const Partition& p);

/// The SP-FSC -> SP-FS gadget: per pair (a,b) one forced-V1 vertex and one
/// forced-V2 vertex, both adjacent to a and b; pairs are dropped.
std::pair<FscInstance, ReductionMap> reduce_fsc_to_fs(const FscInstance& inst);

/// Restriction of a valid FS-instance solution to the original vertices;
/// a valid solution of the FSC instance (asserted).
Partition lift_fs_solution(const FscInstance& fsc, const ReductionMap& map,
                           const Partition& p_fs);

/// Extension of a valid FSC solution by triangle->V1, square->V2; a valid
/// solution of the FS instance (asserted).
Partition project_fsc_solution(const FscInstance& fsc, const ReductionMap& map,
                               const Partition& p_fsc);

/// Primal graph: the instance graph with every complementary pair added as
/// an edge (set union with the existing edges).
Graph primal_graph(const FscInstance& inst);

}  // namespace satpart

#endif
