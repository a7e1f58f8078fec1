#include <doctest.h>

#include <random>

#include "satpart/errors.hpp"
#include "satpart/families.hpp"
#include "satpart/oracle.hpp"
#include "test_util.hpp"

using namespace satpart;
using namespace satpart::testutil;

TEST_CASE("brute force on the named families") {
    CHECK_FALSE(brute_force_sp(generate_family(Family::Complete, {4}), false).has_value());

    auto c5 = brute_force_sp(generate_family(Family::Cycle, {5}), false);
    REQUIRE(c5.has_value());
    // First assignment in counter order: vertex 0 pinned to ONE, bits over
    // vertices 1..4, set bit = TWO; counter 3 = {1,2} on TWO.
    CHECK(c5->vertices_on(Side::One) == std::vector<int>{0, 3, 4});
    CHECK(c5->vertices_on(Side::Two) == std::vector<int>{1, 2});

    auto c4b = brute_force_sp(generate_family(Family::Cycle, {4}), true);
    REQUIRE(c4b.has_value());
    CHECK(c4b->is_balanced());
    CHECK(c4b->vertices_on(Side::One) == std::vector<int>{0, 3});

    CHECK_FALSE(brute_force_sp(Graph(1), false).has_value());
    CHECK_FALSE(brute_force_sp(Graph(0), false).has_value());
}

TEST_CASE("balanced handling") {
    CHECK_FALSE(brute_force_sp(generate_family(Family::Cycle, {5}), true).has_value());
    auto c6 = brute_force_sp(generate_family(Family::Cycle, {6}), true);
    REQUIRE(c6.has_value());
    CHECK(c6->is_balanced());
}

TEST_CASE("capacity errors are loud") {
    Graph big(30);
    CHECK_THROWS_AS(brute_force_sp(big, false), CapacityError);
    CHECK_NOTHROW(brute_force_sp(big, false, 31));
    CHECK_THROWS_AS(brute_force_sp(big, false, 63), InputError);  // cap range
}

TEST_CASE("constrained instances") {
    Graph c4 = generate_family(Family::Cycle, {4});
    // Forcing 0 and 1 apart still leaves the 2+2 split.
    auto w = brute_force(FscInstance(c4, {0}, {1}, {}), false);
    REQUIRE(w.has_value());
    CHECK(w->side(0) == Side::One);
    CHECK(w->side(1) == Side::Two);

    // A pair whose endpoints share a forced set is representable and NO.
    CHECK_FALSE(brute_force(FscInstance(c4, {0, 2}, {}, {{0, 2}}), false).has_value());
}

TEST_CASE("completeness matches independent re-enumeration for n <= 7") {
    for (const Graph& g : connected_graphs_up_to(7)) {
        FscInstance inst(g);
        CHECK(brute_force(inst, false).has_value() == sp_by_reverse_enumeration(g, false));
        CHECK(brute_force(inst, true).has_value() == sp_by_reverse_enumeration(g, true));
    }
}

TEST_CASE("returned witnesses always pass the public checker") {
    std::mt19937 rng(23);
    for (int t = 0; t < 120; ++t) {
        FscInstance inst = random_fsc(rng, 7, 2);
        auto w = brute_force(inst, false);
        if (w) {
            CHECK(is_valid_fsc_solution(inst, *w));
        }
        auto wb = brute_force(inst, true);
        if (wb) {
            CHECK(is_valid_fsc_solution(inst, *wb));
            CHECK(wb->is_balanced());
        }
    }
}

TEST_CASE("adding constraints never turns NO into YES") {
    std::mt19937 rng(31);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng, 2 + t % 5, 0.5);
        FscInstance base(g);
        const bool base_yes = brute_force(base, false).has_value();

        std::uniform_int_distribution<int> vd(0, g.n() - 1);
        int a = vd(rng), b = vd(rng);
        FscInstance with_forced(g, {a}, {}, {});
        bool forced_yes = brute_force(with_forced, false).has_value();
        if (!base_yes) CHECK_FALSE(forced_yes);

        if (a != b) {
            FscInstance with_pair(g, {}, {}, {{a, b}});
            bool pair_yes = brute_force(with_pair, false).has_value();
            if (!base_yes) CHECK_FALSE(pair_yes);
        }
    }
}
