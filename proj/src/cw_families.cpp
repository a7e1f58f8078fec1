#include "satpart/cw_families.hpp"

#include "satpart/errors.hpp"

namespace satpart {

namespace {

int add(std::vector<CNode>& nodes, CNode nd) {
    nodes.push_back(nd);
    return static_cast<int>(nodes.size()) - 1;
}

int leaf(std::vector<CNode>& nodes, int label) {
    return add(nodes, CNode{CNodeKind::Leaf, label, 0, {-1, -1}});
}

int unite(std::vector<CNode>& nodes, int l, int r) {
    return add(nodes, CNode{CNodeKind::Union, 0, 0, {l, r}});
}

int relabel(std::vector<CNode>& nodes, int i, int j, int child) {
    return add(nodes, CNode{CNodeKind::Relabel, i, j, {child, -1}});
}

int join(std::vector<CNode>& nodes, int i, int j, int child) {
    return add(nodes, CNode{CNodeKind::Join, i, j, {child, -1}});
}

}  // namespace

CExpr cexpr_path(int n) {
    if (n < 1) throw InputError("path needs at least one vertex");
    std::vector<CNode> nodes;
    if (n == 1) {
        leaf(nodes, 1);
        return CExpr(std::move(nodes), 1);
    }
    // Grow from the right end: settled vertices 1, end 2, newcomer 3.
    int e = leaf(nodes, 2);
    for (int v = 1; v < n; ++v) {
        e = unite(nodes, e, leaf(nodes, 3));
        e = join(nodes, 2, 3, e);
        e = relabel(nodes, 2, 1, e);
        e = relabel(nodes, 3, 2, e);
    }
    return CExpr(std::move(nodes), 3);
}

CExpr cexpr_cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    std::vector<CNode> nodes;
    // Path with both endpoints kept distinguishable (anchor 2, end 3),
    // closed by a final 2-3 join.
    int e = leaf(nodes, 2);
    e = unite(nodes, e, leaf(nodes, 3));
    e = join(nodes, 2, 3, e);
    for (int v = 2; v < n; ++v) {
        e = unite(nodes, e, leaf(nodes, 4));
        e = join(nodes, 3, 4, e);
        e = relabel(nodes, 3, 1, e);
        e = relabel(nodes, 4, 3, e);
    }
    e = join(nodes, 2, 3, e);
    return CExpr(std::move(nodes), 4);
}

CExpr cexpr_clique(int n) {
    if (n < 1) throw InputError("clique needs at least one vertex");
    std::vector<CNode> nodes;
    int e = leaf(nodes, 1);
    for (int v = 1; v < n; ++v) {
        e = unite(nodes, e, leaf(nodes, 2));
        e = join(nodes, 1, 2, e);
        e = relabel(nodes, 2, 1, e);
    }
    return CExpr(std::move(nodes), n == 1 ? 1 : 2);
}

CExpr cexpr_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InputError("complete bipartite parts must be non-empty");
    std::vector<CNode> nodes;
    int e = leaf(nodes, 1);
    for (int v = 1; v < a; ++v) e = unite(nodes, e, leaf(nodes, 1));
    for (int v = 0; v < b; ++v) e = unite(nodes, e, leaf(nodes, 2));
    e = join(nodes, 1, 2, e);
    return CExpr(std::move(nodes), 2);
}

}  // namespace satpart
