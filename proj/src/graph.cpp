#include "satpart/graph.hpp"

#include <algorithm>
#include <string>

#include "satpart/errors.hpp"

namespace satpart {

Graph::Graph(int n) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    adj_.resize(static_cast<size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& lst : g.adj_) {
        std::sort(lst.begin(), lst.end());
        if (std::adjacent_find(lst.begin(), lst.end()) != lst.end())
            throw InputError("duplicate edge");
    }
    g.m_ = static_cast<int>(edges.size());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& lst = adj_[static_cast<size_t>(u)];
    return std::binary_search(lst.begin(), lst.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::components(int* count) const {
    std::vector<int> comp(static_cast<size_t>(n()), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < n(); ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        comp[static_cast<size_t>(s)] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj_[static_cast<size_t>(u)])
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool Graph::is_connected() const {
    if (n() <= 1) return true;
    int c = 0;
    components(&c);
    return c == 1;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n())
        throw InputError("vertex id " + std::to_string(v) + " out of range [0," +
                         std::to_string(n()) + ")");
}

Partition Partition::from_side_one(int n, const std::vector<int>& ones) {
    std::vector<Side> side(static_cast<size_t>(n), Side::Two);
    for (int v : ones) {
        if (v < 0 || v >= n) throw InputError("partition vertex out of range");
        side[static_cast<size_t>(v)] = Side::One;
    }
    return Partition(std::move(side));
}

int Partition::count(Side s) const {
    int c = 0;
    for (Side t : side_) c += (t == s);
    return c;
}

std::vector<int> Partition::vertices_on(Side s) const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (side_[static_cast<size_t>(v)] == s) out.push_back(v);
    return out;
}

Partition Partition::flipped() const {
    std::vector<Side> side(side_);
    for (Side& s : side) s = opposite(s);
    return Partition(std::move(side));
}

int own_side_degree(const Graph& g, const Partition& p, int v) {
    g.check_vertex(v);
    if (p.size() != g.n()) throw InputError("partition size does not match graph");
    int own = 0;
    for (int w : g.neighbors(v)) own += (p.side(w) == p.side(v));
    return own;
}

bool satisfied(const Graph& g, const Partition& p, int v) {
    int own = own_side_degree(g, p, v);
    int other = g.degree(v) - own;
    return own >= other;
}

bool is_satisfactory(const Graph& g, const Partition& p, bool require_nontrivial) {
    if (p.size() != g.n()) throw InputError("partition size does not match graph");
    if (require_nontrivial && !p.is_nontrivial()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (!satisfied(g, p, v)) return false;
    return true;
}

}  // namespace satpart
