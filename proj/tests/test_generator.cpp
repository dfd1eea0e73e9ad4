#include <doctest.h>

#include "dpc/cycles.hpp"
#include "dpc/generator.hpp"
#include "dpc/plane_graph.hpp"

using namespace dpc;

TEST_CASE("generated graphs are members of the class") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GenConfig cfg;
        cfg.target_vertices = 8 + static_cast<int>(seed % 20);
        cfg.seed = seed;
        PlaneGraph g = generate(cfg);
        CAPTURE(seed);
        CHECK(g.num_vertices() >= cfg.target_vertices);
        GraphClassReport r = classify(g);
        CHECK(r.in_class_g);
        CHECK(g.num_vertices() - g.num_edges() + g.num_faces() == 2);
    }
}

TEST_CASE("generation is deterministic, byte for byte") {
    GenConfig cfg;
    cfg.target_vertices = 17;
    cfg.seed = 99;
    CHECK(to_pg(generate(cfg)) == to_pg(generate(cfg)));
    GenConfig other = cfg;
    other.seed = 100;
    CHECK(to_pg(generate(cfg)) != to_pg(generate(other)));
}

TEST_CASE("custom forbidden sets are respected") {
    // Forbidding every length up to 13 with short insertions leaves no
    // admissible split at all: the generator must exhaust, not loop.
    GenConfig cfg;
    cfg.target_vertices = 12;
    cfg.seed = 3;
    cfg.forbidden_lengths = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
    cfg.max_attempts = 3000;
    CHECK_THROWS_AS(generate(cfg), Error);

    // with long enough insertions, girth >= 14 is reachable
    cfg.max_path_edges = 13;
    cfg.max_attempts = 200000;
    cfg.target_vertices = 15;
    PlaneGraph g = generate(cfg);
    CHECK(enumerate_cycles(g, 13).empty());
}

TEST_CASE("cyclomatic cap bounds the signature sweep size") {
    for (std::uint64_t seed = 40; seed < 48; ++seed) {
        GenConfig cfg;
        cfg.target_vertices = 10;
        cfg.seed = seed;
        cfg.max_cyclomatic = 4;
        try {
            PlaneGraph g = generate(cfg);
            CHECK(g.num_edges() - g.num_vertices() + 1 <= 4);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::AttemptsExhausted);
        }
    }
}

TEST_CASE("impossible configurations exhaust cleanly") {
    GenConfig cfg;
    cfg.target_vertices = 30;
    cfg.seed = 1;
    cfg.max_cyclomatic = 1;
    cfg.max_attempts = 200;
    CHECK_THROWS_AS(generate(cfg), Error);
}
