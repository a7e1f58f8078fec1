#include <doctest.h>

#include "satpart/cw_families.hpp"
#include "satpart/errors.hpp"
#include "satpart/families.hpp"
#include "test_util.hpp"

using namespace satpart;
using namespace satpart::testutil;

TEST_CASE("parsing the K2 expression") {
    CExpr e = parse_cexpr("(n 1 2 (u (o 1) (o 2)))");
    CHECK(e.label_count() == 2);
    CHECK(e.leaf_count() == 2);
    LabeledGraph lg = eval_cexpr(e);
    CHECK(lg.graph.n() == 2);
    CHECK(lg.graph.has_edge(0, 1));
    CHECK(lg.labels == std::vector<int>{1, 2});
}

TEST_CASE("single leaf") {
    CExpr e = parse_cexpr("(o 1)");
    LabeledGraph lg = eval_cexpr(e);
    CHECK(lg.graph.n() == 1);
    CHECK(lg.graph.m() == 0);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_cexpr("(n 1 1 (o 1))"), ParseError);
    CHECK_THROWS_AS(parse_cexpr("(p 2 2 (o 1))"), ParseError);
    CHECK_THROWS_AS(parse_cexpr("(o 0)"), ParseError);
    CHECK_THROWS_AS(parse_cexpr("(x 1)"), ParseError);
    CHECK_THROWS_AS(parse_cexpr("(u (o 1))"), ParseError);
    CHECK_THROWS_AS(parse_cexpr("(o 1) junk"), ParseError);
    CHECK_THROWS_AS(parse_cexpr(""), ParseError);
    try {
        parse_cexpr("(u (o 1)\n(o zero))");
    } catch (const ParseError& err) {
        CHECK(err.line == 2);
    }
}

TEST_CASE("evaluation semantics") {
    // Union of two leaves: two isolated vertices.
    LabeledGraph u = eval_cexpr(parse_cexpr("(u (o 1) (o 2))"));
    CHECK(u.graph.m() == 0);
    CHECK(u.graph.n() == 2);

    // Relabel with no i-vertices: identical graph.
    LabeledGraph r = eval_cexpr(parse_cexpr("(p 3 1 (n 1 2 (u (o 1) (o 2))))"));
    CHECK(r.graph.has_edge(0, 1));
    CHECK(r.labels == std::vector<int>{1, 2});

    // Vertex ids follow leaf order.
    LabeledGraph path = eval_cexpr(cexpr_path(4));
    CHECK(path.graph == generate_family(Family::Path, {4}));
}

TEST_CASE("bundled generators match the graph families") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(eval_cexpr(cexpr_path(n)).graph == generate_family(Family::Path, {n}));
        CHECK(eval_cexpr(cexpr_clique(n)).graph == generate_family(Family::Complete, {n}));
    }
    for (int n = 3; n <= 10; ++n)
        CHECK(eval_cexpr(cexpr_cycle(n)).graph == generate_family(Family::Cycle, {n}));
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            CHECK(eval_cexpr(cexpr_complete_bipartite(a, b)).graph ==
                  generate_family(Family::CompleteBipartite, {a, b}));
}

TEST_CASE("expression round trip through to_string") {
    for (const CExpr& e : {cexpr_path(5), cexpr_cycle(6), cexpr_clique(4)}) {
        CExpr back = parse_cexpr(e.to_string());
        CHECK(back.to_string() == e.to_string());
        CHECK(eval_cexpr(back).graph == eval_cexpr(e).graph);
    }
}

namespace {

// Every join block must be empty below it.
bool strongly_irredundant(const CExpr& e) {
    auto evals = eval_all_nodes(e);
    for (size_t t = 0; t < e.nodes().size(); ++t) {
        const CNode& nd = e.node(static_cast<int>(t));
        if (nd.kind != CNodeKind::Join) continue;
        const NodeEval& child = evals[static_cast<size_t>(nd.child[0])];
        for (int u = 0; u < child.count(); ++u) {
            if (child.labels[static_cast<size_t>(u)] != nd.a) continue;
            for (int v = 0; v < child.count(); ++v)
                if (child.labels[static_cast<size_t>(v)] == nd.b && child.graph.has_edge(u, v))
                    return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("make_irredundant drops a doubled join, keeping the inner one") {
    CExpr doubled = parse_cexpr("(n 1 2 (n 1 2 (u (o 1) (o 2))))");
    CHECK_FALSE(strongly_irredundant(doubled));
    CExpr fixed = make_irredundant(doubled);
    CHECK(fixed.to_string() == "(n 1 2 (u (o 1) (o 2)))");
    CHECK(eval_cexpr(fixed).graph == eval_cexpr(doubled).graph);
}

TEST_CASE("make_irredundant is a fixpoint on irredundant input") {
    for (const CExpr& e : {cexpr_path(6), cexpr_cycle(7), cexpr_clique(5),
                           cexpr_complete_bipartite(2, 3),
                           parse_cexpr("(n 1 2 (u (o 1) (o 2)))")}) {
        REQUIRE(strongly_irredundant(e));
        CHECK(make_irredundant(e).to_string() == e.to_string());
    }
}

TEST_CASE("make_irredundant resolves partially covered joins") {
    // Inner join adds 0-1; the outer block {0}x{1,2} contains it, so the
    // inner join is absorbed and the outer one adds both edges.
    CExpr partial = parse_cexpr("(n 1 2 (u (n 1 2 (u (o 1) (o 2))) (o 2)))");
    CHECK_FALSE(strongly_irredundant(partial));
    CExpr fixed = make_irredundant(partial);
    CHECK(strongly_irredundant(fixed));
    CHECK(eval_cexpr(fixed).graph == eval_cexpr(partial).graph);
    CHECK(fixed.to_string() == "(n 1 2 (u (u (o 1) (o 2)) (o 2)))");

    // A no-op join (no 2-vertices) is left alone.
    CExpr noop = parse_cexpr("(n 1 2 (o 1))");
    CHECK(make_irredundant(noop).to_string() == noop.to_string());
}

TEST_CASE("make_irredundant handles relabel-shifted redundancy") {
    // The first join adds the edge under labels 1-2; after relabelling, a
    // second join over 1-3 re-covers it plus a fresh vertex.
    CExpr e = parse_cexpr("(n 1 3 (u (p 2 3 (n 1 2 (u (o 1) (o 2)))) (o 3)))");
    CHECK_FALSE(strongly_irredundant(e));
    CExpr fixed = make_irredundant(e);
    CHECK(strongly_irredundant(fixed));
    CHECK(eval_cexpr(fixed).graph == eval_cexpr(e).graph);
}

TEST_CASE("make_irredundant on random expressions") {
    std::mt19937 rng(2025);
    std::uniform_int_distribution<int> leaves(1, 9), cd(2, 3);
    for (int t = 0; t < 300; ++t) {
        CExpr e = random_cexpr(rng, leaves(rng), cd(rng));
        LabeledGraph before = eval_cexpr(e);
        CExpr fixed = make_irredundant(e);
        REQUIRE(eval_cexpr(fixed).graph == before.graph);
        REQUIRE(eval_cexpr(fixed).labels == before.labels);
        REQUIRE(strongly_irredundant(fixed));
        // Idempotence.
        CHECK(make_irredundant(fixed).to_string() == fixed.to_string());
    }
}
