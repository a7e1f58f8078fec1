#include "satpart/ilp.hpp"

#include "satpart/errors.hpp"

namespace satpart {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

struct Box {
    long long lo, hi;
};

// Tightens boxes against every row until nothing changes.
// Returns false when some box becomes empty (no solution in this subtree).
bool propagate(const IlpSystem& sys, std::vector<Box>& box) {
    const size_t k = box.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const IlpRow& row : sys.rows) {
            long long min_lhs = 0, max_lhs = 0;
            for (size_t i = 0; i < k; ++i) {
                long long a = row.coeff[i];
                if (a > 0) {
                    min_lhs += a * box[i].lo;
                    max_lhs += a * box[i].hi;
                } else if (a < 0) {
                    min_lhs += a * box[i].hi;
                    max_lhs += a * box[i].lo;
                }
            }
            if (max_lhs < row.rhs) return false;
            if (row.rel == Rel::Eq && min_lhs > row.rhs) return false;

            for (size_t i = 0; i < k; ++i) {
                long long a = row.coeff[i];
                if (a == 0) continue;
                // LHS restricted to the other variables.
                long long rest_min = min_lhs - (a > 0 ? a * box[i].lo : a * box[i].hi);
                long long rest_max = max_lhs - (a > 0 ? a * box[i].hi : a * box[i].lo);
                // a*x >= rhs - rest_max, and for equalities a*x <= rhs - rest_min.
                long long num_lo = row.rhs - rest_max;
                if (a > 0) {
                    long long lo = ceil_div(num_lo, a);
                    if (lo > box[i].lo) { box[i].lo = lo; changed = true; }
                    if (row.rel == Rel::Eq) {
                        long long hi = floor_div(row.rhs - rest_min, a);
                        if (hi < box[i].hi) { box[i].hi = hi; changed = true; }
                    }
                } else {
                    long long hi = floor_div(num_lo, a);
                    if (hi < box[i].hi) { box[i].hi = hi; changed = true; }
                    if (row.rel == Rel::Eq) {
                        long long lo = ceil_div(row.rhs - rest_min, a);
                        if (lo > box[i].lo) { box[i].lo = lo; changed = true; }
                    }
                }
                if (box[i].lo > box[i].hi) return false;
            }
        }
    }
    return true;
}

bool satisfied_exactly(const IlpSystem& sys, const std::vector<Box>& box) {
    for (const IlpRow& row : sys.rows) {
        long long lhs = 0;
        for (size_t i = 0; i < box.size(); ++i) lhs += row.coeff[i] * box[i].lo;
        if (row.rel == Rel::Geq ? lhs < row.rhs : lhs != row.rhs) return false;
    }
    return true;
}

bool search(const IlpSystem& sys, std::vector<Box> box, std::optional<std::vector<long long>>& out) {
    if (!propagate(sys, box)) return false;
    size_t branch = box.size();
    for (size_t i = 0; i < box.size(); ++i)
        if (box[i].lo < box[i].hi) { branch = i; break; }
    if (branch == box.size()) {
        if (!satisfied_exactly(sys, box)) return false;
        std::vector<long long> x(box.size());
        for (size_t i = 0; i < box.size(); ++i) x[i] = box[i].lo;
        out = std::move(x);
        return true;
    }
    for (long long v = box[branch].lo; v <= box[branch].hi; ++v) {
        std::vector<Box> next = box;
        next[branch].lo = next[branch].hi = v;
        if (search(sys, std::move(next), out)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<long long>> solve_ilp_feasibility(const IlpSystem& sys) {
    std::vector<Box> box;
    box.reserve(sys.vars.size());
    for (const IlpVar& v : sys.vars) {
        if (v.lo > v.hi) return std::nullopt;
        box.push_back({v.lo, v.hi});
    }
    for (const IlpRow& row : sys.rows)
        internal_check(row.coeff.size() == sys.vars.size(), "ILP row width mismatch");
    std::optional<std::vector<long long>> out;
    search(sys, std::move(box), out);
    return out;
}

}  // namespace satpart
