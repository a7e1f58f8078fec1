#include "satpart/cexpr.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "satpart/errors.hpp"

namespace satpart {

CExpr::CExpr(std::vector<CNode> nodes, int label_count)
    : nodes_(std::move(nodes)), label_count_(label_count) {
    internal_check(!nodes_.empty(), "empty expression");
    ranges_.resize(nodes_.size());
    int next_vertex = 0;
    for (size_t t = 0; t < nodes_.size(); ++t) {
        const CNode& nd = nodes_[t];
        switch (nd.kind) {
            case CNodeKind::Leaf:
                internal_check(nd.a >= 1 && nd.a <= label_count_, "leaf label out of range");
                ranges_[t] = {next_vertex, next_vertex + 1};
                ++next_vertex;
                break;
            case CNodeKind::Union: {
                internal_check(nd.child[0] >= 0 && nd.child[0] < static_cast<int>(t) &&
                                   nd.child[1] >= 0 && nd.child[1] < static_cast<int>(t),
                               "union child out of order");
                auto [llo, lhi] = ranges_[static_cast<size_t>(nd.child[0])];
                auto [rlo, rhi] = ranges_[static_cast<size_t>(nd.child[1])];
                internal_check(lhi == rlo, "union children not contiguous");
                ranges_[t] = {llo, rhi};
                break;
            }
            case CNodeKind::Relabel:
            case CNodeKind::Join:
                internal_check(nd.child[0] >= 0 && nd.child[0] < static_cast<int>(t),
                               "unary child out of order");
                internal_check(nd.a >= 1 && nd.a <= label_count_ && nd.b >= 1 &&
                                   nd.b <= label_count_ && nd.a != nd.b,
                               "bad label pair");
                ranges_[t] = ranges_[static_cast<size_t>(nd.child[0])];
                break;
        }
    }
    leaf_count_ = next_vertex;
    internal_check(ranges_.back().first == 0 && ranges_.back().second == leaf_count_,
                   "root does not cover all leaves");
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit Cursor(const std::string& t) : text(t) {}

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') { ++line; col = 1; }
        else ++col;
        ++pos;
    }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void expect(char c) {
        skip_ws();
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }
    int integer() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000) fail("integer too large");
            advance();
        }
        return static_cast<int>(v);
    }
    int label() {
        skip_ws();
        int l = line, c = col;
        int v = integer();
        if (v < 1) throw ParseError("label out of range (labels are 1-based)", l, c);
        return v;
    }
};

// Recursive descent; appends nodes post-order and returns the node index.
int parse_expr(Cursor& cur, std::vector<CNode>& nodes, int& max_label, int depth) {
    if (depth > 100000) cur.fail("expression too deeply nested");
    cur.expect('(');
    cur.skip_ws();
    if (cur.eof()) cur.fail("unexpected end of input");
    const int op_line = cur.line, op_col = cur.col;
    const char op = cur.peek();
    cur.advance();
    CNode nd;
    switch (op) {
        case 'o': {
            nd.kind = CNodeKind::Leaf;
            nd.a = cur.label();
            break;
        }
        case 'u': {
            nd.kind = CNodeKind::Union;
            nd.child[0] = parse_expr(cur, nodes, max_label, depth + 1);
            nd.child[1] = parse_expr(cur, nodes, max_label, depth + 1);
            break;
        }
        case 'p':
        case 'n': {
            nd.kind = (op == 'p') ? CNodeKind::Relabel : CNodeKind::Join;
            nd.a = cur.label();
            nd.b = cur.label();
            if (nd.a == nd.b)
                throw ParseError(std::string(op == 'p' ? "relabel" : "join") +
                                     " requires two distinct labels",
                                 op_line, op_col);
            nd.child[0] = parse_expr(cur, nodes, max_label, depth + 1);
            break;
        }
        default:
            throw ParseError(std::string("unknown operator '") + op + "'", op_line, op_col);
    }
    cur.expect(')');
    max_label = std::max({max_label, nd.a, nd.b});
    nodes.push_back(nd);
    return static_cast<int>(nodes.size()) - 1;
}

}  // namespace

CExpr parse_cexpr(const std::string& text) {
    Cursor cur(text);
    std::vector<CNode> nodes;
    int max_label = 0;
    parse_expr(cur, nodes, max_label, 0);
    cur.skip_ws();
    if (!cur.eof()) cur.fail("trailing input after expression");
    return CExpr(std::move(nodes), max_label);
}

std::string CExpr::to_string() const {
    // Iterative post-order stitching: build the string per node.
    std::vector<std::string> text(nodes_.size());
    for (size_t t = 0; t < nodes_.size(); ++t) {
        const CNode& nd = nodes_[t];
        switch (nd.kind) {
            case CNodeKind::Leaf:
                text[t] = "(o " + std::to_string(nd.a) + ")";
                break;
            case CNodeKind::Union:
                text[t] = "(u " + text[static_cast<size_t>(nd.child[0])] + " " +
                          text[static_cast<size_t>(nd.child[1])] + ")";
                break;
            case CNodeKind::Relabel:
            case CNodeKind::Join:
                text[t] = std::string("(") + (nd.kind == CNodeKind::Relabel ? "p " : "n ") +
                          std::to_string(nd.a) + " " + std::to_string(nd.b) + " " +
                          text[static_cast<size_t>(nd.child[0])] + ")";
                break;
        }
    }
    return text.back();
}

namespace {

// Bottom-up evaluation carrying, per node, the labels of its vertex range
// and the accumulated edge list (in global leaf ids).
struct RawEval {
    std::vector<std::vector<int>> labels;                    // per node, local
    std::vector<std::vector<std::pair<int, int>>> edges;     // per node, global ids
};

RawEval raw_eval(const CExpr& e) {
    RawEval ev;
    const auto& nodes = e.nodes();
    ev.labels.resize(nodes.size());
    ev.edges.resize(nodes.size());
    for (size_t t = 0; t < nodes.size(); ++t) {
        const CNode& nd = nodes[t];
        auto [lo, hi] = e.vertex_range(static_cast<int>(t));
        switch (nd.kind) {
            case CNodeKind::Leaf:
                ev.labels[t] = {nd.a};
                break;
            case CNodeKind::Union: {
                const auto& l = ev.labels[static_cast<size_t>(nd.child[0])];
                const auto& r = ev.labels[static_cast<size_t>(nd.child[1])];
                ev.labels[t] = l;
                ev.labels[t].insert(ev.labels[t].end(), r.begin(), r.end());
                ev.edges[t] = ev.edges[static_cast<size_t>(nd.child[0])];
                const auto& re = ev.edges[static_cast<size_t>(nd.child[1])];
                ev.edges[t].insert(ev.edges[t].end(), re.begin(), re.end());
                break;
            }
            case CNodeKind::Relabel: {
                ev.labels[t] = ev.labels[static_cast<size_t>(nd.child[0])];
                for (int& l : ev.labels[t])
                    if (l == nd.a) l = nd.b;
                ev.edges[t] = ev.edges[static_cast<size_t>(nd.child[0])];
                break;
            }
            case CNodeKind::Join: {
                const auto& child_labels = ev.labels[static_cast<size_t>(nd.child[0])];
                ev.labels[t] = child_labels;
                ev.edges[t] = ev.edges[static_cast<size_t>(nd.child[0])];
                std::unordered_set<long long> present;
                for (auto [u, v] : ev.edges[t])
                    present.insert(static_cast<long long>(std::min(u, v)) * e.leaf_count() +
                                   std::max(u, v));
                for (int u = 0; u < hi - lo; ++u) {
                    if (child_labels[static_cast<size_t>(u)] != nd.a) continue;
                    for (int v = 0; v < hi - lo; ++v) {
                        if (child_labels[static_cast<size_t>(v)] != nd.b) continue;
                        int gu = lo + u, gv = lo + v;
                        long long key = static_cast<long long>(std::min(gu, gv)) * e.leaf_count() +
                                        std::max(gu, gv);
                        if (present.insert(key).second)
                            ev.edges[t].emplace_back(std::min(gu, gv), std::max(gu, gv));
                    }
                }
                break;
            }
        }
    }
    return ev;
}

}  // namespace

std::vector<NodeEval> eval_all_nodes(const CExpr& e) {
    RawEval ev = raw_eval(e);
    std::vector<NodeEval> out(e.nodes().size());
    for (size_t t = 0; t < e.nodes().size(); ++t) {
        auto [lo, hi] = e.vertex_range(static_cast<int>(t));
        std::vector<std::pair<int, int>> local;
        local.reserve(ev.edges[t].size());
        for (auto [u, v] : ev.edges[t]) local.emplace_back(u - lo, v - lo);
        out[t].lo = lo;
        out[t].hi = hi;
        out[t].graph = Graph::from_edges(hi - lo, local);
        out[t].labels = std::move(ev.labels[t]);
    }
    return out;
}

LabeledGraph eval_cexpr(const CExpr& e) {
    RawEval ev = raw_eval(e);
    const size_t root = e.nodes().size() - 1;
    return LabeledGraph{Graph::from_edges(e.leaf_count(), ev.edges[root]),
                        std::move(ev.labels[root])};
}

namespace {

// Join-block bookkeeping for the irredundancy transform, in global ids.
struct BlockInfo {
    std::vector<std::pair<int, int>> pairs;  // normalized (min,max)
    size_t present = 0;                      // how many already exist below
};

long long pack(int u, int v, int n) {
    return static_cast<long long>(std::min(u, v)) * n + std::max(u, v);
}

// Splices dead unary nodes out of the tree and rebuilds a compact post-order
// node vector. Leaf order (and therefore vertex numbering) is preserved.
CExpr compact(const CExpr& e, const std::vector<bool>& dead) {
    const auto& nodes = e.nodes();
    std::vector<int> remap(nodes.size(), -1);
    std::vector<CNode> out;
    for (size_t t = 0; t < nodes.size(); ++t) {
        if (dead[t]) {
            remap[t] = remap[static_cast<size_t>(nodes[t].child[0])];
            continue;
        }
        CNode nd = nodes[t];
        if (nd.child[0] >= 0) nd.child[0] = remap[static_cast<size_t>(nd.child[0])];
        if (nd.child[1] >= 0) nd.child[1] = remap[static_cast<size_t>(nd.child[1])];
        out.push_back(nd);
        remap[t] = static_cast<int>(out.size()) - 1;
    }
    return CExpr(std::move(out), e.label_count());
}

// Collects the join descendants of `top` whose block is contained in
// `block`; the containment is all-or-nothing per descendant (label maps act
// uniformly on a subtree), which internal_check re-verifies.
std::vector<int> covered_join_descendants(const CExpr& e,
                                          const std::vector<BlockInfo>& blocks, int top,
                                          const std::unordered_set<long long>& block_set) {
    std::vector<int> found;
    std::vector<int> stack = {e.node(top).child[0]};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        const CNode& nd = e.node(t);
        if (nd.kind == CNodeKind::Join && !blocks[static_cast<size_t>(t)].pairs.empty()) {
            const auto& pairs = blocks[static_cast<size_t>(t)].pairs;
            const bool first_in =
                block_set.count(pack(pairs[0].first, pairs[0].second, e.leaf_count())) > 0;
            for (auto [u, v] : pairs)
                internal_check((block_set.count(pack(u, v, e.leaf_count())) > 0) == first_in,
                               "join block partially overlaps an ancestor block");
            if (first_in) found.push_back(t);
        }
        if (nd.child[0] >= 0) stack.push_back(nd.child[0]);
        if (nd.child[1] >= 0) stack.push_back(nd.child[1]);
    }
    return found;
}

}  // namespace

CExpr make_irredundant(const CExpr& e) {
    CExpr work = e;
    for (;;) {
        RawEval ev = raw_eval(work);
        const auto& nodes = work.nodes();
        const int n = work.leaf_count();

        std::vector<BlockInfo> blocks(nodes.size());
        for (size_t t = 0; t < nodes.size(); ++t) {
            const CNode& nd = nodes[t];
            if (nd.kind != CNodeKind::Join) continue;
            const size_t c = static_cast<size_t>(nd.child[0]);
            auto [lo, hi] = work.vertex_range(static_cast<int>(t));
            std::unordered_set<long long> below;
            for (auto [u, v] : ev.edges[c]) below.insert(pack(u, v, n));
            const auto& labels = ev.labels[c];
            for (int u = 0; u < hi - lo; ++u) {
                if (labels[static_cast<size_t>(u)] != nd.a) continue;
                for (int v = 0; v < hi - lo; ++v) {
                    if (labels[static_cast<size_t>(v)] != nd.b) continue;
                    blocks[t].pairs.emplace_back(std::min(lo + u, lo + v),
                                                 std::max(lo + u, lo + v));
                    blocks[t].present += below.count(pack(lo + u, lo + v, n));
                }
            }
        }

        // Joins that add nothing new: splice them all out in one sweep.
        std::vector<bool> dead(nodes.size(), false);
        bool any_dead = false;
        for (size_t t = 0; t < nodes.size(); ++t) {
            if (nodes[t].kind != CNodeKind::Join) continue;
            if (!blocks[t].pairs.empty() && blocks[t].present == blocks[t].pairs.size()) {
                dead[t] = true;
                any_dead = true;
            }
        }
        if (any_dead) {
            work = compact(work, dead);
            continue;
        }

        // Lowest partially covered join: the deeper joins whose blocks it
        // contains are exactly the ones that pre-added its edges; splicing
        // them out leaves this join's block empty below.
        int partial = -1;
        for (size_t t = 0; t < nodes.size(); ++t) {
            if (nodes[t].kind != CNodeKind::Join) continue;
            if (blocks[t].present > 0 && blocks[t].present < blocks[t].pairs.size()) {
                partial = static_cast<int>(t);
                break;
            }
        }
        if (partial < 0) break;

        std::unordered_set<long long> block_set;
        for (auto [u, v] : blocks[static_cast<size_t>(partial)].pairs)
            block_set.insert(pack(u, v, n));
        auto victims = covered_join_descendants(work, blocks, partial, block_set);
        internal_check(!victims.empty(), "partial join block with no covered descendant");
        for (int t : victims) dead[static_cast<size_t>(t)] = true;
        work = compact(work, dead);
    }
    return work;
}

}  // namespace satpart
