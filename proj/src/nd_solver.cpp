#include "satpart/nd_solver.hpp"

#include <algorithm>

#include "satpart/errors.hpp"

namespace satpart {

namespace {

// N(u)\{v} == N(v)\{u}, on sorted adjacency lists.
bool same_type(const Graph& g, int u, int v) {
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    size_t i = 0, j = 0;
    while (i < nu.size() || j < nv.size()) {
        if (i < nu.size() && nu[i] == v) { ++i; continue; }
        if (j < nv.size() && nv[j] == u) { ++j; continue; }
        if (i == nu.size() || j == nv.size()) return false;
        if (nu[i] != nv[j]) return false;
        ++i; ++j;
    }
    return true;
}

}  // namespace

NdDecomposition compute_type_classes(const Graph& g) {
    NdDecomposition d;
    for (int v = 0; v < g.n(); ++v) {
        bool placed = false;
        for (auto& cls : d.classes) {
            if (same_type(g, cls.front(), v)) {
                cls.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) d.classes.push_back({v});
    }
    d.kinds.reserve(d.classes.size());
    for (const auto& cls : d.classes) {
        if (cls.size() == 1) {
            d.kinds.push_back(ClassKind::Singleton);
            continue;
        }
        const bool clique = g.has_edge(cls[0], cls[1]);
        // A same-type class induces a clique or an independent set; verify.
        for (size_t i = 0; i < cls.size(); ++i)
            for (size_t j = i + 1; j < cls.size(); ++j)
                internal_check(g.has_edge(cls[i], cls[j]) == clique,
                               "type class is neither clique nor independent");
        d.kinds.push_back(clique ? ClassKind::Clique : ClassKind::Independent);
    }
    return d;
}

TypeGraph build_type_graph(const Graph& g, const NdDecomposition& d) {
    const int k = d.k();
    std::vector<int> class_of(static_cast<size_t>(g.n()), -1);
    for (int i = 0; i < k; ++i)
        for (int v : d.classes[static_cast<size_t>(i)]) class_of[static_cast<size_t>(v)] = i;
    for (int c : class_of) internal_check(c >= 0, "decomposition does not cover the graph");

    TypeGraph h;
    h.adj.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            long long cross = 0;
            for (int v : d.classes[static_cast<size_t>(i)])
                for (int w : g.neighbors(v)) cross += (class_of[static_cast<size_t>(w)] == j);
            const long long full =
                static_cast<long long>(d.size_of(i)) * static_cast<long long>(d.size_of(j));
            internal_check(cross == 0 || cross == full,
                           "classes are neither fully joined nor disconnected");
            if (cross == full && full > 0) {
                h.adj[static_cast<size_t>(i)].push_back(j);
                h.adj[static_cast<size_t>(j)].push_back(i);
            }
        }
    }
    for (auto& lst : h.adj) std::sort(lst.begin(), lst.end());
    return h;
}

GuessStream::GuessStream(const NdDecomposition& d) {
    radix_.reserve(static_cast<size_t>(d.k()));
    for (int i = 0; i < d.k(); ++i) radix_.push_back(d.clique_kind(i) ? 2 : 3);
    digits_.assign(radix_.size(), 0);
    done_ = radix_.empty();
}

bool GuessStream::advance() {
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (++digits_[i] < radix_[i]) return true;
        digits_[i] = 0;
    }
    return false;
}

bool GuessStream::next(Guess& out) {
    while (!done_) {
        const bool all_i1 = std::all_of(digits_.begin(), digits_.end(), [](int d) { return d == 0; });
        const bool all_i2 = std::all_of(digits_.begin(), digits_.end(), [](int d) { return d == 1; });
        if (!all_i1 && !all_i2) {
            out.resize(digits_.size());
            for (size_t i = 0; i < digits_.size(); ++i)
                out[i] = static_cast<Placement>(digits_[i]);
            done_ = !advance();
            return true;
        }
        done_ = !advance();
    }
    return false;
}

IlpSystem build_ilp(const NdDecomposition& d, const TypeGraph& h, const Guess& guess,
                    bool balanced) {
    const int k = d.k();
    internal_check(static_cast<int>(guess.size()) == k, "guess size mismatch");
    for (int i = 0; i < k; ++i)
        internal_check(!(d.clique_kind(i) && guess[static_cast<size_t>(i)] == Placement::I3),
                       "clique-kind class assigned to I3");

    IlpSystem sys;
    sys.vars.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        const long long n_i = d.size_of(i);
        switch (guess[static_cast<size_t>(i)]) {
            case Placement::I1: sys.vars.push_back({n_i, n_i}); break;
            case Placement::I2: sys.vars.push_back({0, 0}); break;
            case Placement::I3: sys.vars.push_back({1, n_i - 1}); break;
        }
    }

    auto n_of = [&](int i) { return static_cast<long long>(d.size_of(i)); };
    auto in = [&](int i, Placement p) { return guess[static_cast<size_t>(i)] == p; };

    // One satisfaction row per class.
    for (int j = 0; j < k; ++j) {
        IlpRow row;
        row.coeff.assign(static_cast<size_t>(k), 0);
        const auto& open = h.adj[static_cast<size_t>(j)];
        std::vector<int> closed = open;
        closed.insert(std::lower_bound(closed.begin(), closed.end(), j), j);

        long long sum_i1 = 0, sum_i2 = 0, sum_i3 = 0;
        if (d.clique_kind(j)) {
            // Closed neighbourhood; the vertex's own class contributes.
            for (int i : closed) {
                if (in(i, Placement::I1)) sum_i1 += n_of(i);
                if (in(i, Placement::I2)) sum_i2 += n_of(i);
                if (in(i, Placement::I3)) sum_i3 += n_of(i);
            }
            if (in(j, Placement::I1)) {
                for (int i : closed)
                    if (in(i, Placement::I3)) row.coeff[static_cast<size_t>(i)] = 2;
                // The I2 sum ranges over the open neighbourhood; j is in I1,
                // so closed and open agree on it.
                row.rel = Rel::Geq;
                row.rhs = 1 + sum_i2 + sum_i3 - sum_i1;
            } else {
                for (int i : closed)
                    if (in(i, Placement::I3)) row.coeff[static_cast<size_t>(i)] = -2;
                row.rel = Rel::Geq;
                row.rhs = 1 + sum_i1 - sum_i2 - sum_i3;
            }
        } else {
            // Independent class: open neighbourhood only.
            for (int i : open) {
                if (in(i, Placement::I1)) sum_i1 += n_of(i);
                if (in(i, Placement::I2)) sum_i2 += n_of(i);
                if (in(i, Placement::I3)) sum_i3 += n_of(i);
            }
            if (in(j, Placement::I1) || in(j, Placement::I3)) {
                for (int i : open)
                    if (in(i, Placement::I3)) row.coeff[static_cast<size_t>(i)] = 2;
                row.rel = in(j, Placement::I3) ? Rel::Eq : Rel::Geq;
                row.rhs = sum_i2 + sum_i3 - sum_i1;
            } else {
                for (int i : open)
                    if (in(i, Placement::I3)) row.coeff[static_cast<size_t>(i)] = -2;
                row.rel = Rel::Geq;
                row.rhs = sum_i1 - sum_i2 - sum_i3;
            }
        }
        sys.rows.push_back(std::move(row));
    }

    // Nontriviality, doubled to keep x-coefficients at ±2:
    //   |V1| >= 1:  sum_{I1} n_i + sum_{I3} x_i >= 1
    //   |V2| >= 1:  sum_{I2} n_i + sum_{I3} (n_i - x_i) >= 1
    long long total_i1 = 0, total_i2 = 0, total_i3 = 0;
    for (int i = 0; i < k; ++i) {
        if (in(i, Placement::I1)) total_i1 += n_of(i);
        if (in(i, Placement::I2)) total_i2 += n_of(i);
        if (in(i, Placement::I3)) total_i3 += n_of(i);
    }
    IlpRow side1, side2;
    side1.coeff.assign(static_cast<size_t>(k), 0);
    side2.coeff.assign(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        if (!in(i, Placement::I3)) continue;
        side1.coeff[static_cast<size_t>(i)] = 2;
        side2.coeff[static_cast<size_t>(i)] = -2;
    }
    side1.rel = Rel::Geq;
    side1.rhs = 2 * (1 - total_i1);
    side2.rel = Rel::Geq;
    side2.rhs = 2 * (1 - total_i2 - total_i3);
    sys.rows.push_back(std::move(side1));
    sys.rows.push_back(std::move(side2));

    if (balanced) {
        // sum_{I1} n_i + sum_{I3} x_i = sum_{I3} (n_i - x_i) + sum_{I2} n_i
        IlpRow bal;
        bal.coeff.assign(static_cast<size_t>(k), 0);
        for (int i = 0; i < k; ++i)
            if (in(i, Placement::I3)) bal.coeff[static_cast<size_t>(i)] = 2;
        bal.rel = Rel::Eq;
        bal.rhs = total_i3 + total_i2 - total_i1;
        sys.rows.push_back(std::move(bal));
    }
    return sys;
}

namespace {

Partition materialize(const NdDecomposition& d, const std::vector<long long>& x, int n) {
    std::vector<int> ones;
    for (int i = 0; i < d.k(); ++i) {
        const auto& cls = d.classes[static_cast<size_t>(i)];
        for (long long t = 0; t < x[static_cast<size_t>(i)]; ++t)
            ones.push_back(cls[static_cast<size_t>(t)]);
    }
    return Partition::from_side_one(n, ones);
}

}  // namespace

std::optional<Partition> solve_nd(const Graph& g, bool balanced, NdStats* stats) {
    const int n = g.n();
    NdStats local;
    NdStats& st = stats ? *stats : local;
    st = NdStats{};
    if (n < 2) return std::nullopt;
    if (balanced && n % 2 != 0) return std::nullopt;

    NdDecomposition d = compute_type_classes(g);
    st.k = d.k();

    if (!balanced && !g.is_connected()) {
        // Component vs. rest keeps every neighbourhood intact.
        auto comp = g.components();
        std::vector<int> ones;
        for (int v = 0; v < n; ++v)
            if (comp[static_cast<size_t>(v)] == 0) ones.push_back(v);
        Partition p = Partition::from_side_one(n, ones);
        internal_check(is_satisfactory(g, p, true), "component witness failed validation");
        return p;
    }

    TypeGraph h = build_type_graph(g, d);
    GuessStream stream(d);
    Guess guess;
    while (stream.next(guess)) {
        IlpSystem sys = build_ilp(d, h, guess, balanced);
        ++st.guesses_tried;
        if (auto x = solve_ilp_feasibility(sys)) {
            Partition p = materialize(d, *x, n);
            internal_check(is_satisfactory(g, p, true), "nd witness failed validation");
            internal_check(!balanced || p.is_balanced(), "nd witness not balanced");
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace satpart
