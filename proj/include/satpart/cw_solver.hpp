#ifndef SATPART_CW_SOLVER_HPP
#define SATPART_CW_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "satpart/cexpr.hpp"
#include "satpart/graph.hpp"

namespace satpart {

/// Sentinel for "this side holds no i-vertices, surplus undefined".
inline constexpr int kTopSurplus = 1 << 28;

/// Table index (r, rbar, s, sbar) flattened as [r | rbar | s | sbar], one
/// slot per label (1-based label l lives at slot l-1). r/rbar count the
/// i-vertices on each side; s/sbar are the minimum surplus (own-side minus
/// other-side neighbours) over those vertices, kTopSurplus when the side has
/// none. Invariant: r slot is 0 exactly when the s slot is TOP.
struct DpKey {
    std::vector<int> v;

    explicit DpKey(int c = 0) : v(static_cast<size_t>(4 * c), 0) {
        for (int l = 0; l < c; ++l) { s(l + 1) = kTopSurplus; sbar(l + 1) = kTopSurplus; }
    }

    int c() const { return static_cast<int>(v.size()) / 4; }
    int& r(int label) { return v[static_cast<size_t>(label - 1)]; }
    int& rbar(int label) { return v[static_cast<size_t>(c() + label - 1)]; }
    int& s(int label) { return v[static_cast<size_t>(2 * c() + label - 1)]; }
    int& sbar(int label) { return v[static_cast<size_t>(3 * c() + label - 1)]; }
    int r(int label) const { return v[static_cast<size_t>(label - 1)]; }
    int rbar(int label) const { return v[static_cast<size_t>(c() + label - 1)]; }
    int s(int label) const { return v[static_cast<size_t>(2 * c() + label - 1)]; }
    int sbar(int label) const { return v[static_cast<size_t>(3 * c() + label - 1)]; }

    int side_one_total() const;
    int side_two_total() const;
    DpKey mirrored() const;  // swaps (r,s) with (rbar,sbar)

    bool operator==(const DpKey& other) const = default;
};

struct DpKeyHash {
    size_t operator()(const DpKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : k.v) h = (h ^ static_cast<std::uint64_t>(x)) * 1099511628211ull;
        return static_cast<size_t>(h);
    }
};

/// How a true key arose, for witness reconstruction. Leaves record the side
/// of their vertex; unions the key indices in both child tables; relabels
/// and joins the source key index.
struct DpProv {
    int via1 = -1;
    int via2 = -1;
};

/// Sparse set of true keys for one expression node, in deterministic
/// insertion order. First derivation of a key wins.
class DpTable {
public:
    bool add(const DpKey& key, DpProv prov);
    bool contains(const DpKey& key) const { return index_.count(key) > 0; }
    size_t size() const { return keys_.size(); }
    const std::vector<DpKey>& keys() const { return keys_; }
    const DpKey& key(int i) const { return keys_[static_cast<size_t>(i)]; }
    DpProv prov(int i) const { return prov_[static_cast<size_t>(i)]; }

private:
    std::vector<DpKey> keys_;
    std::vector<DpProv> prov_;
    std::unordered_map<DpKey, int, DpKeyHash> index_;
};

/// Leaf table: the vertex goes to one side or the other; two keys.
DpTable dp_leaf(int label, int c);

/// Disjoint union: r adds pointwise, surpluses combine by min with TOP as
/// the identity, over all pairs of true keys.
DpTable dp_union(const DpTable& left, const DpTable& right);

/// Join i-j over an empty block: every i-vertex gains the key's r(j)
/// neighbours in S and cnt_j - r(j) in the complement, shifting s(i) by
/// 2*r(j) - cnt_j (TOP stays TOP); symmetrically for j and the barred side.
/// node_count is |V_t|, used to bound the resulting surpluses.
DpTable dp_join(const DpTable& child, int i, int j, int cnt_i, int cnt_j, int node_count);

/// Relabel i -> j: counts merge, surpluses combine by min, label i empties.
DpTable dp_relabel(const DpTable& child, int i, int j);

/// Bottom-up tables for every node of an irredundant expression.
std::vector<DpTable> run_dp(const CExpr& e);

/// |V_t^l| per node (slot l-1), needed by join updates.
std::vector<std::vector<int>> per_node_label_counts(const CExpr& e);

struct CwStats {
    int expr_nodes = 0;
    size_t max_table_keys = 0;
    size_t total_keys = 0;
};

/// Decides SP (or BSP) for the graph of the expression; enforces
/// irredundancy first. A root key accepts when every finite surplus on both
/// sides is >= 0, both sides are non-empty, and the side totals agree when
/// balanced. The witness is rebuilt by walking stored provenance to the
/// leaves; vertex ids follow leaf order.
std::optional<Partition> solve_cw(const CExpr& e, bool balanced, CwStats* stats = nullptr);

}  // namespace satpart

#endif
