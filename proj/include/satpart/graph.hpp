#ifndef SATPART_GRAPH_HPP
#define SATPART_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace satpart {

/// Undirected simple graph on dense vertex ids 0..n-1.
/// Immutable after construction; adjacency lists are kept sorted.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n = 0);

    /// Builds and validates: rejects self-loops, duplicate edges and
    /// out-of-range endpoints. Edge direction is irrelevant.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;

    /// All edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;  // true for n <= 1
    /// Component id per vertex, ids assigned in order of first vertex seen.
    std::vector<int> components(int* count = nullptr) const;

    void check_vertex(int v) const;  // throws InputError if out of range

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

enum class Side : std::uint8_t { One, Two };

inline Side opposite(Side s) { return s == Side::One ? Side::Two : Side::One; }

/// Total two-sided vertex assignment (V1, V2).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Side> side) : side_(std::move(side)) {}
    /// Vertices in `ones` go to side ONE, the rest to TWO.
    static Partition from_side_one(int n, const std::vector<int>& ones);

    int size() const { return static_cast<int>(side_.size()); }
    Side side(int v) const { return side_.at(static_cast<size_t>(v)); }
    int count(Side s) const;
    std::vector<int> vertices_on(Side s) const;  // sorted
    bool is_nontrivial() const { return count(Side::One) > 0 && count(Side::Two) > 0; }
    bool is_balanced() const { return count(Side::One) == count(Side::Two); }
    Partition flipped() const;

    bool operator==(const Partition& other) const = default;

private:
    std::vector<Side> side_;
};

/// d_S(v) for S = the side v lives on: number of v's neighbours in own part.
int own_side_degree(const Graph& g, const Partition& p, int v);

/// A vertex is satisfied when it has at least as many neighbours in its own
/// part as in the other one.
bool satisfied(const Graph& g, const Partition& p, int v);

/// All vertices satisfied; when require_nontrivial, both parts non-empty.
bool is_satisfactory(const Graph& g, const Partition& p, bool require_nontrivial);

}  // namespace satpart

#endif
