#include <doctest.h>

#include "satpart/errors.hpp"
#include "satpart/families.hpp"
#include "satpart/io.hpp"
#include "test_util.hpp"

using namespace satpart;
using namespace satpart::testutil;

TEST_CASE("parsing plain graphs") {
    FscInstance k2 = parse_instance("p 2 1\ne 0 1\n");
    CHECK(k2.graph.n() == 2);
    CHECK(k2.graph.has_edge(0, 1));
    CHECK(k2.is_plain());

    FscInstance with_pair = parse_instance("p 3 1\ne 0 1\npair 0 2\n");
    CHECK(with_pair.pairs == std::vector<std::pair<int, int>>{{0, 2}});

    FscInstance commented = parse_instance("c hello\np 2 1\n\nc mid\ne 1 0\n");
    CHECK(commented.graph.has_edge(0, 1));
}

TEST_CASE("parse diagnostics") {
    CHECK_THROWS_AS(parse_instance("p 2 1\ne 0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p 2 2\ne 0 1\ne 1 0\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(parse_instance("p 2 1\ne 0 1\ne 0 1\n"), ParseError);  // count mismatch too
    CHECK_THROWS_AS(parse_instance("p 2 0\nq 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("e 0 1\n"), ParseError);   // missing header
    CHECK_THROWS_AS(parse_instance("p 2 1\ne 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p 2 1\ne 0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    try {
        parse_instance("p 3 1\ne 0 1\nsq 7\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("instance round trips are canonical") {
    std::mt19937 rng(3);
    for (int t = 0; t < 25; ++t) {
        FscInstance inst = random_fsc(rng, 7, 2);
        std::string text = serialize_instance(inst);
        FscInstance back = parse_instance(text);
        CHECK(back == inst);
        CHECK(serialize_instance(back) == text);
    }
    // Non-canonical input normalizes.
    std::string messy = "p 3 2\ne 2 0\ne 1 0\ntri 2\ntri 2\n";
    CHECK(serialize_instance(parse_instance(messy)) ==
          "p 3 2\ne 0 1\ne 0 2\ntri 2\n");
}

TEST_CASE("mmo parsing") {
    MmoInstance m = parse_mmo("p 3 2\ne 0 1 2\ne 1 2 1\nr 2\n");
    CHECK(m.r == 2);
    CHECK(m.edges.size() == 2);
    CHECK(m.edges[0].w == 2);
    CHECK(serialize_mmo(parse_mmo(serialize_mmo(m))) == serialize_mmo(m));

    CHECK_THROWS_AS(parse_mmo("p 2 1\ne 0 1 1\n"), ParseError);          // missing r
    CHECK_THROWS_AS(parse_mmo("p 2 1\ne 0 1 0\nr 1\n"), ParseError);     // weight 0
    CHECK_THROWS_AS(parse_mmo("p 2 1\ne 0 1 100\nr 1\n"), ParseError);   // above cap
    CHECK_THROWS_AS(parse_mmo("p 2 1\ne 0 1\nr 1\n"), ParseError);       // missing weight
    CHECK_THROWS_AS(parse_mmo("p 2 1\ne 0 1 1\nr 1\nr 1\n"), ParseError);
}

TEST_CASE("orientation parsing") {
    MmoInstance m = parse_mmo("p 3 2\ne 0 1 1\ne 1 2 1\nr 1\n");
    Orientation o = parse_orientation("o 1 0\no 1 2\n", m);
    CHECK(o.dir == std::vector<std::pair<int, int>>{{1, 0}, {1, 2}});
    CHECK(serialize_orientation(m, o) == "o 1 0\no 1 2\n");

    CHECK_THROWS_AS(parse_orientation("o 1 0\n", m), InputError);            // missing edge
    CHECK_THROWS_AS(parse_orientation("o 1 0\no 1 2\no 0 2\n", m), InputError);
    CHECK_THROWS_AS(parse_orientation("o 1 0\no 0 1\no 1 2\n", m), ParseError);  // twice
}

TEST_CASE("witness json round trip") {
    Partition p = mk_partition(5, {0, 3});
    Partition back = partition_from_json(partition_to_json(p), 5);
    CHECK(back == p);

    CHECK_THROWS_AS(partition_from_json("{\"one\":[0]}", 2), InputError);
    CHECK_THROWS_AS(partition_from_json("{\"one\":[0],\"two\":[0,1]}", 2), InputError);
    CHECK_THROWS_AS(partition_from_json("{\"one\":[0],\"two\":[]}", 2), InputError);
    CHECK_THROWS_AS(partition_from_json("{\"one\":[9],\"two\":[0,1]}", 2), InputError);
    CHECK_THROWS_AS(partition_from_json("not json", 2), InputError);
}

TEST_CASE("reduction map json round trip") {
    ReductionMap map(3);
    map.add("h_1^0");
    map.add("0^1_1");
    ReductionMap back = reduction_map_from_json(reduction_map_to_json(map));
    CHECK(back.original_count() == 3);
    CHECK(back.total_count() == 5);
    CHECK(back.id_of("h_1^0") == 3);
    CHECK(back.name_of(4) == "0^1_1");

    CHECK_THROWS_AS(reduction_map_from_json("{}"), InputError);
}
