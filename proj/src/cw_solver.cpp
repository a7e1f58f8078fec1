#include "satpart/cw_solver.hpp"

#include <algorithm>
#include <cmath>

#include "satpart/errors.hpp"

namespace satpart {

int DpKey::side_one_total() const {
    int t = 0;
    for (int l = 1; l <= c(); ++l) t += r(l);
    return t;
}

int DpKey::side_two_total() const {
    int t = 0;
    for (int l = 1; l <= c(); ++l) t += rbar(l);
    return t;
}

DpKey DpKey::mirrored() const {
    DpKey m(c());
    for (int l = 1; l <= c(); ++l) {
        m.r(l) = rbar(l);
        m.rbar(l) = r(l);
        m.s(l) = sbar(l);
        m.sbar(l) = s(l);
    }
    return m;
}

bool DpTable::add(const DpKey& key, DpProv prov) {
    auto [it, inserted] = index_.emplace(key, static_cast<int>(keys_.size()));
    if (!inserted) return false;
    keys_.push_back(key);
    prov_.push_back(prov);
    return true;
}

namespace {

void check_key(const DpKey& k) {
    for (int l = 1; l <= k.c(); ++l) {
        internal_check((k.r(l) == 0) == (k.s(l) == kTopSurplus), "r/s emptiness out of sync");
        internal_check((k.rbar(l) == 0) == (k.sbar(l) == kTopSurplus),
                       "rbar/sbar emptiness out of sync");
    }
}

int min_top(int a, int b) {
    if (a == kTopSurplus) return b;
    if (b == kTopSurplus) return a;
    return std::min(a, b);
}

}  // namespace

DpTable dp_leaf(int label, int c) {
    DpTable t;
    DpKey in_s(c);
    in_s.r(label) = 1;
    in_s.s(label) = 0;
    t.add(in_s, DpProv{0, -1});
    DpKey in_sbar(c);
    in_sbar.rbar(label) = 1;
    in_sbar.sbar(label) = 0;
    t.add(in_sbar, DpProv{1, -1});
    return t;
}

DpTable dp_union(const DpTable& left, const DpTable& right) {
    DpTable out;
    for (size_t i = 0; i < left.size(); ++i) {
        const DpKey& a = left.key(static_cast<int>(i));
        for (size_t j = 0; j < right.size(); ++j) {
            const DpKey& b = right.key(static_cast<int>(j));
            DpKey k(a.c());
            for (int l = 1; l <= a.c(); ++l) {
                k.r(l) = a.r(l) + b.r(l);
                k.rbar(l) = a.rbar(l) + b.rbar(l);
                k.s(l) = min_top(a.s(l), b.s(l));
                k.sbar(l) = min_top(a.sbar(l), b.sbar(l));
            }
            out.add(k, DpProv{static_cast<int>(i), static_cast<int>(j)});
        }
    }
    return out;
}

DpTable dp_join(const DpTable& child, int i, int j, int cnt_i, int cnt_j, int node_count) {
    DpTable out;
    for (size_t t = 0; t < child.size(); ++t) {
        DpKey k = child.key(static_cast<int>(t));
        auto shift = [&](int& surplus, int gain_same_side, int total_other) {
            if (surplus == kTopSurplus) return;
            surplus += 2 * gain_same_side - total_other;
            internal_check(std::abs(surplus) <= node_count - 1, "surplus out of range after join");
        };
        shift(k.s(i), k.r(j), cnt_j);
        shift(k.s(j), k.r(i), cnt_i);
        shift(k.sbar(i), k.rbar(j), cnt_j);
        shift(k.sbar(j), k.rbar(i), cnt_i);
        check_key(k);
        const bool fresh = out.add(k, DpProv{static_cast<int>(t), -1});
        internal_check(fresh, "join produced colliding keys");
    }
    return out;
}

DpTable dp_relabel(const DpTable& child, int i, int j) {
    DpTable out;
    for (size_t t = 0; t < child.size(); ++t) {
        const DpKey& src = child.key(static_cast<int>(t));
        DpKey k = src;
        k.r(j) = src.r(i) + src.r(j);
        k.r(i) = 0;
        k.s(j) = min_top(src.s(i), src.s(j));
        k.s(i) = kTopSurplus;
        k.rbar(j) = src.rbar(i) + src.rbar(j);
        k.rbar(i) = 0;
        k.sbar(j) = min_top(src.sbar(i), src.sbar(j));
        k.sbar(i) = kTopSurplus;
        check_key(k);
        out.add(k, DpProv{static_cast<int>(t), -1});
    }
    return out;
}

std::vector<std::vector<int>> per_node_label_counts(const CExpr& e) {
    const auto& nodes = e.nodes();
    const size_t c = static_cast<size_t>(e.label_count());
    std::vector<std::vector<int>> counts(nodes.size(), std::vector<int>(c, 0));
    for (size_t t = 0; t < nodes.size(); ++t) {
        const CNode& nd = nodes[t];
        switch (nd.kind) {
            case CNodeKind::Leaf:
                counts[t][static_cast<size_t>(nd.a - 1)] = 1;
                break;
            case CNodeKind::Union:
                counts[t] = counts[static_cast<size_t>(nd.child[0])];
                for (size_t l = 0; l < c; ++l)
                    counts[t][l] += counts[static_cast<size_t>(nd.child[1])][l];
                break;
            case CNodeKind::Relabel:
                counts[t] = counts[static_cast<size_t>(nd.child[0])];
                counts[t][static_cast<size_t>(nd.b - 1)] += counts[t][static_cast<size_t>(nd.a - 1)];
                counts[t][static_cast<size_t>(nd.a - 1)] = 0;
                break;
            case CNodeKind::Join:
                counts[t] = counts[static_cast<size_t>(nd.child[0])];
                break;
        }
    }
    return counts;
}

std::vector<DpTable> run_dp(const CExpr& e) {
    const auto& nodes = e.nodes();
    const int c = e.label_count();
    const auto counts = per_node_label_counts(e);
    // (n+1)^{2c} (2n+1)^{2c} index combinations; sparse tables must stay under it.
    const double n = e.leaf_count();
    const double bound =
        std::min(1e18, std::pow(n + 1, 2.0 * c) * std::pow(2 * n + 1, 2.0 * c));

    std::vector<DpTable> tables(nodes.size());
    for (size_t t = 0; t < nodes.size(); ++t) {
        const CNode& nd = nodes[t];
        switch (nd.kind) {
            case CNodeKind::Leaf:
                tables[t] = dp_leaf(nd.a, c);
                break;
            case CNodeKind::Union:
                tables[t] = dp_union(tables[static_cast<size_t>(nd.child[0])],
                                     tables[static_cast<size_t>(nd.child[1])]);
                break;
            case CNodeKind::Relabel:
                tables[t] = dp_relabel(tables[static_cast<size_t>(nd.child[0])], nd.a, nd.b);
                break;
            case CNodeKind::Join: {
                const auto& cc = counts[t];
                auto [lo, hi] = e.vertex_range(static_cast<int>(t));
                tables[t] = dp_join(tables[static_cast<size_t>(nd.child[0])], nd.a, nd.b,
                                    cc[static_cast<size_t>(nd.a - 1)],
                                    cc[static_cast<size_t>(nd.b - 1)], hi - lo);
                break;
            }
        }
        internal_check(static_cast<double>(tables[t].size()) <= bound,
                       "dp table exceeds the theoretical key bound");
    }
    return tables;
}

namespace {

void assign_sides(const CExpr& e, const std::vector<DpTable>& tables, int node, int key_idx,
                  std::vector<Side>& side) {
    const CNode& nd = e.node(node);
    const DpProv pv = tables[static_cast<size_t>(node)].prov(key_idx);
    switch (nd.kind) {
        case CNodeKind::Leaf: {
            auto [lo, hi] = e.vertex_range(node);
            side[static_cast<size_t>(lo)] = (pv.via1 == 0) ? Side::One : Side::Two;
            break;
        }
        case CNodeKind::Union:
            assign_sides(e, tables, nd.child[0], pv.via1, side);
            assign_sides(e, tables, nd.child[1], pv.via2, side);
            break;
        case CNodeKind::Relabel:
        case CNodeKind::Join:
            assign_sides(e, tables, nd.child[0], pv.via1, side);
            break;
    }
}

bool accepts(const DpKey& k, bool balanced) {
    for (int l = 1; l <= k.c(); ++l) {
        if (k.s(l) != kTopSurplus && k.s(l) < 0) return false;
        if (k.sbar(l) != kTopSurplus && k.sbar(l) < 0) return false;
    }
    if (k.side_one_total() < 1 || k.side_two_total() < 1) return false;
    if (balanced && k.side_one_total() != k.side_two_total()) return false;
    return true;
}

}  // namespace

std::optional<Partition> solve_cw(const CExpr& e, bool balanced, CwStats* stats) {
    const CExpr ir = make_irredundant(e);
    const auto tables = run_dp(ir);
    if (stats) {
        stats->expr_nodes = static_cast<int>(ir.nodes().size());
        stats->max_table_keys = 0;
        stats->total_keys = 0;
        for (const auto& t : tables) {
            stats->max_table_keys = std::max(stats->max_table_keys, t.size());
            stats->total_keys += t.size();
        }
    }
    const int root = ir.root();
    const DpTable& rt = tables[static_cast<size_t>(root)];
    for (size_t i = 0; i < rt.size(); ++i) {
        if (!accepts(rt.key(static_cast<int>(i)), balanced)) continue;
        std::vector<Side> side(static_cast<size_t>(ir.leaf_count()), Side::One);
        assign_sides(ir, tables, root, static_cast<int>(i), side);
        Partition p{std::move(side)};
        internal_check(is_satisfactory(eval_cexpr(ir).graph, p, true),
                       "cw witness failed validation");
        internal_check(!balanced || p.is_balanced(), "cw witness not balanced");
        return p;
    }
    return std::nullopt;
}

}  // namespace satpart
