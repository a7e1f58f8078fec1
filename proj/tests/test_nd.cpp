#include <doctest.h>

#include <random>

#include "satpart/families.hpp"
#include "satpart/nd_solver.hpp"
#include "satpart/oracle.hpp"
#include "test_util.hpp"

using namespace satpart;
using namespace satpart::testutil;

namespace {

std::vector<Guess> all_guesses(const NdDecomposition& d) {
    std::vector<Guess> out;
    GuessStream stream(d);
    Guess g;
    while (stream.next(g)) out.push_back(g);
    return out;
}

}  // namespace

TEST_CASE("type classes of the small families") {
    NdDecomposition k4 = compute_type_classes(generate_family(Family::Complete, {4}));
    REQUIRE(k4.k() == 1);
    CHECK(k4.kinds[0] == ClassKind::Clique);
    CHECK(k4.classes[0] == std::vector<int>{0, 1, 2, 3});

    NdDecomposition c4 = compute_type_classes(generate_family(Family::Cycle, {4}));
    REQUIRE(c4.k() == 2);
    CHECK(c4.classes[0] == std::vector<int>{0, 2});
    CHECK(c4.classes[1] == std::vector<int>{1, 3});
    CHECK(c4.kinds[0] == ClassKind::Independent);

    NdDecomposition c5 = compute_type_classes(generate_family(Family::Cycle, {5}));
    CHECK(c5.k() == 5);
    for (ClassKind k : c5.kinds) CHECK(k == ClassKind::Singleton);

    NdDecomposition star = compute_type_classes(generate_family(Family::Star, {4}));
    REQUIRE(star.k() == 2);
    CHECK(star.kinds[0] == ClassKind::Singleton);  // center
    CHECK(star.kinds[1] == ClassKind::Independent);
}

TEST_CASE("type classes form the minimum partition") {
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng, 2 + t % 7, 0.5);
        NdDecomposition d = compute_type_classes(g);
        // Classes cover V and are pairwise non-mergeable: representatives of
        // distinct classes differ in type.
        int covered = 0;
        for (const auto& cls : d.classes) covered += static_cast<int>(cls.size());
        CHECK(covered == g.n());
        for (int i = 0; i < d.k(); ++i)
            for (int j = i + 1; j < d.k(); ++j) {
                int u = d.classes[static_cast<size_t>(i)][0];
                int v = d.classes[static_cast<size_t>(j)][0];
                auto nu = g.neighbors(u);
                auto nv = g.neighbors(v);
                std::erase(nu, v);
                std::erase(nv, u);
                CHECK(nu != nv);
            }
    }
}

TEST_CASE("type graph of K2,4, K4 and C4") {
    Graph k24 = generate_family(Family::CompleteBipartite, {2, 4});
    NdDecomposition d = compute_type_classes(k24);
    REQUIRE(d.k() == 2);
    TypeGraph h = build_type_graph(k24, d);
    CHECK(h.adj[0] == std::vector<int>{1});
    CHECK(h.adj[1] == std::vector<int>{0});

    Graph k4 = generate_family(Family::Complete, {4});
    TypeGraph hk = build_type_graph(k4, compute_type_classes(k4));
    CHECK(hk.k() == 1);
    CHECK(hk.adj[0].empty());

    Graph c4 = generate_family(Family::Cycle, {4});
    TypeGraph hc = build_type_graph(c4, compute_type_classes(c4));
    CHECK(hc.adj[0] == std::vector<int>{1});
}

TEST_CASE("guess enumeration counts and order") {
    NdDecomposition k4 = compute_type_classes(generate_family(Family::Complete, {4}));
    CHECK(all_guesses(k4).empty());  // both candidates trivial

    NdDecomposition c4 = compute_type_classes(generate_family(Family::Cycle, {4}));
    auto guesses = all_guesses(c4);
    REQUIRE(guesses.size() == 7);  // 9 raw minus all-I1 and all-I2
    // Mixed-radix order, first class fastest.
    CHECK(guesses[0] == Guess{Placement::I2, Placement::I1});
    CHECK(guesses[1] == Guess{Placement::I3, Placement::I1});
    CHECK(guesses[2] == Guess{Placement::I1, Placement::I2});
    CHECK(guesses.back() == Guess{Placement::I3, Placement::I3});

    // One clique + two independent classes: 2*3*3 = 18 raw, 16 streamed.
    Graph g = generate_family(Family::CompleteMultipartite, {2, 2, 1});
    NdDecomposition d = compute_type_classes(g);
    REQUIRE(d.k() == 3);
    int cliquish = 0;
    for (int i = 0; i < 3; ++i) cliquish += d.clique_kind(i);
    CHECK(cliquish == 1);
    CHECK(all_guesses(d).size() == 16);
}

TEST_CASE("build_ilp matches the hand-expanded C4 and K4 systems") {
    Graph c4 = generate_family(Family::Cycle, {4});
    NdDecomposition d = compute_type_classes(c4);
    TypeGraph h = build_type_graph(c4, d);

    // Guess ({0,2} -> I1, {1,3} -> I2): row for class 0 reads 0 >= 2.
    IlpSystem sys = build_ilp(d, h, {Placement::I1, Placement::I2}, false);
    CHECK(sys.rows.size() == 4);  // one per class + two nontriviality rows
    CHECK_FALSE(solve_ilp_feasibility(sys).has_value());

    // Both classes I3: equalities force x = (1,1).
    IlpSystem sys3 = build_ilp(d, h, {Placement::I3, Placement::I3}, false);
    auto x = solve_ilp_feasibility(sys3);
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<long long>{1, 1});
    // The class rows are the equalities 2x2 = 2 and 2x1 = 2.
    CHECK(sys3.rows[0].rel == Rel::Eq);
    CHECK(sys3.rows[0].coeff == std::vector<long long>{0, 2});
    CHECK(sys3.rows[0].rhs == 2);
    CHECK(sys3.rows[1].coeff == std::vector<long long>{2, 0});

    // Balanced adds one equality row; x = (1,1) still works.
    IlpSystem sysb = build_ilp(d, h, {Placement::I3, Placement::I3}, true);
    CHECK(sysb.rows.size() == 5);
    auto xb = solve_ilp_feasibility(sysb);
    REQUIRE(xb.has_value());
    CHECK(*xb == std::vector<long long>{1, 1});

    // K4, guess all-I1: the V2 >= 1 nontriviality row is violated.
    Graph k4 = generate_family(Family::Complete, {4});
    NdDecomposition dk = compute_type_classes(k4);
    TypeGraph hk = build_type_graph(k4, dk);
    IlpSystem sysk = build_ilp(dk, hk, {Placement::I1}, false);
    CHECK(sysk.rows.size() == 3);
    CHECK_FALSE(solve_ilp_feasibility(sysk).has_value());
}

TEST_CASE("build_ilp structural invariants") {
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng, 2 + t % 7, 0.5);
        NdDecomposition d = compute_type_classes(g);
        TypeGraph h = build_type_graph(g, d);
        GuessStream stream(d);
        Guess guess;
        while (stream.next(guess)) {
            for (bool balanced : {false, true}) {
                IlpSystem sys = build_ilp(d, h, guess, balanced);
                CHECK(sys.rows.size() == static_cast<size_t>(d.k()) + 2 + (balanced ? 1 : 0));
                for (const IlpRow& row : sys.rows)
                    for (size_t i = 0; i < row.coeff.size(); ++i) {
                        const long long c = row.coeff[i];
                        CHECK((c == 0 || c == 2 || c == -2));
                        if (c != 0) CHECK(guess[i] == Placement::I3);
                    }
            }
        }
    }
}

TEST_CASE("solve_nd on the named families") {
    CHECK_FALSE(solve_nd(generate_family(Family::Star, {3}), false).has_value());

    auto c4 = solve_nd(generate_family(Family::Cycle, {4}), false);
    REQUIRE(c4.has_value());
    CHECK(c4->vertices_on(Side::One) == std::vector<int>{0, 1});

    Graph k24 = generate_family(Family::CompleteBipartite, {2, 4});
    auto w24 = solve_nd(k24, false);
    REQUIRE(w24.has_value());
    CHECK(is_satisfactory(k24, *w24, true));

    // P3 = K_{1,2} is a star: not partitionable.
    CHECK_FALSE(solve_nd(generate_family(Family::Path, {3}), false).has_value());
    CHECK_FALSE(solve_nd(generate_family(Family::CompleteBipartite, {3, 4}), false).has_value());

    CHECK_FALSE(solve_nd(Graph(1), false).has_value());
    CHECK_FALSE(solve_nd(generate_family(Family::Cycle, {5}), true).has_value());
}

TEST_CASE("disconnected graphs") {
    // Two triangles: component-vs-rest witness.
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    NdStats stats;
    auto w = solve_nd(g, false, &stats);
    REQUIRE(w.has_value());
    CHECK(stats.guesses_tried == 0);
    CHECK(w->vertices_on(Side::One) == std::vector<int>{0, 1, 2});

    // Balanced goes through the ILP and still succeeds.
    auto wb = solve_nd(g, true, &stats);
    REQUIRE(wb.has_value());
    CHECK(wb->is_balanced());
    CHECK(stats.guesses_tried > 0);
}

TEST_CASE("oracle equivalence on all connected graphs up to 5 vertices") {
    for (const Graph& g : connected_graphs_up_to(5)) {
        for (bool balanced : {false, true}) {
            CHECK(solve_nd(g, balanced).has_value() ==
                  brute_force_sp(g, balanced).has_value());
        }
    }
}

TEST_CASE("oracle equivalence on random graphs") {
    std::mt19937 rng(41);
    for (int t = 0; t < 120; ++t) {
        const double p = (t % 3 == 0) ? 0.2 : (t % 3 == 1) ? 0.5 : 0.8;
        Graph g = random_graph(rng, 2 + t % 7, p);
        for (bool balanced : {false, true})
            CHECK(solve_nd(g, balanced).has_value() == brute_force_sp(g, balanced).has_value());
    }
}

TEST_CASE("witnesses respect class exchangeability") {
    std::mt19937 rng(53);
    int exercised = 0;
    for (int t = 0; t < 200 && exercised < 12; ++t) {
        Graph g = random_graph(rng, 4 + t % 5, 0.5);
        auto w = solve_nd(g, false);
        if (!w) continue;
        NdDecomposition d = compute_type_classes(g);
        // Count V1 vertices per class, then redistribute randomly within
        // each class 50 times; every redistribution must stay satisfactory.
        std::vector<int> x(static_cast<size_t>(d.k()), 0);
        bool any_split = false;
        for (int i = 0; i < d.k(); ++i) {
            for (int v : d.classes[static_cast<size_t>(i)])
                x[static_cast<size_t>(i)] += (w->side(v) == Side::One);
            any_split = any_split || (x[static_cast<size_t>(i)] > 0 &&
                                      x[static_cast<size_t>(i)] < d.size_of(i));
        }
        if (!any_split) continue;
        ++exercised;
        for (int swap = 0; swap < 50; ++swap) {
            std::vector<int> ones;
            for (int i = 0; i < d.k(); ++i) {
                auto cls = d.classes[static_cast<size_t>(i)];
                std::shuffle(cls.begin(), cls.end(), rng);
                for (int j = 0; j < x[static_cast<size_t>(i)]; ++j)
                    ones.push_back(cls[static_cast<size_t>(j)]);
            }
            CHECK(is_satisfactory(g, Partition::from_side_one(g.n(), ones), true));
        }
    }
    CHECK(exercised > 0);
}
