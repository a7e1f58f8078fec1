#ifndef SATPART_CEXPR_HPP
#define SATPART_CEXPR_HPP

#include <string>
#include <vector>

#include "satpart/graph.hpp"

namespace satpart {

enum class CNodeKind { Leaf, Union, Relabel, Join };

/// One node of a c-expression tree. Labels are 1-based.
///   Leaf:    a = label of the created vertex
///   Union:   child[0], child[1]
///   Relabel: a -> b on child[0]        (rho_{a,b})
///   Join:    all a-b edges on child[0] (eta_{a,b}, a != b)
struct CNode {
    CNodeKind kind = CNodeKind::Leaf;
    int a = 0;
    int b = 0;
    int child[2] = {-1, -1};
};

/// Rooted binary clique-width expression. Nodes are stored in post-order
/// (children before parents, root last); vertices are numbered by leaf
/// order, leftmost leaf = 0.
class CExpr {
public:
    CExpr(std::vector<CNode> nodes, int label_count);

    const std::vector<CNode>& nodes() const { return nodes_; }
    const CNode& node(int t) const { return nodes_[static_cast<size_t>(t)]; }
    int root() const { return static_cast<int>(nodes_.size()) - 1; }
    int label_count() const { return label_count_; }
    int leaf_count() const { return leaf_count_; }

    /// Vertex id range [lo, hi) covered by the subexpression at node t.
    std::pair<int, int> vertex_range(int t) const { return ranges_[static_cast<size_t>(t)]; }

    std::string to_string() const;

private:
    std::vector<CNode> nodes_;
    std::vector<std::pair<int, int>> ranges_;
    int label_count_ = 0;
    int leaf_count_ = 0;
};

/// Grammar:  E ::= (o i) | (u E E) | (p i j E) | (n i j E)
/// with (p i j E) = relabel i->j and (n i j E) = join i-j, i != j.
/// Rejects malformed input with line/column diagnostics.
CExpr parse_cexpr(const std::string& text);

/// Graph represented by a (sub)expression together with its vertex labels.
struct LabeledGraph {
    Graph graph;
    std::vector<int> labels;  // 1-based label per vertex
};

/// Per-node evaluation snapshot. Vertex ids are global leaf ids; the local
/// graph uses ids 0..count-1 for vertices lo..hi-1.
struct NodeEval {
    int lo = 0;
    int hi = 0;
    Graph graph;              // induced on the node's vertices, local ids
    std::vector<int> labels;  // label at this node, local ids

    int count() const { return hi - lo; }
};

/// Evaluates every node bottom-up.
std::vector<NodeEval> eval_all_nodes(const CExpr& e);

/// The labeled graph of the whole expression, vertex ids in leaf order.
LabeledGraph eval_cexpr(const CExpr& e);

/// Equivalent expression in which every join meets an empty bipartite block:
/// no i-vertex is adjacent to a j-vertex below an eta_{i,j} node, so each
/// edge is added by exactly one join. Joins whose block is already fully
/// present are spliced out; a partially covered join absorbs the deeper
/// joins whose blocks it contains. Already-irredundant input comes back
/// structurally unchanged.
CExpr make_irredundant(const CExpr& e);

}  // namespace satpart

#endif
