#include <doctest.h>

#include <algorithm>
#include <set>

#include "dpc/fixtures.hpp"
#include "dpc/structure.hpp"
#include "dpc/surgery.hpp"

using namespace dpc;

namespace {

LabelledGraph identity_of(const PlaneGraph& g) {
    return all_identity(std::make_shared<const PlaneGraph>(g), 3);
}

} // namespace

TEST_CASE("deleting an internal vertex merges faces") {
    PlaneGraph g = fixtures::w5(); // hub is internal
    SurgeryPlan plan;
    plan.deletions = {5};
    ApplyResult r = apply_plan(identity_of(g), plan);
    CHECK(r.lg.g().num_vertices() == 5);
    CHECK(r.lg.g().num_faces() == 2);
    CHECK(r.old_to_new[5] == -1);
    CHECK(r.old_to_new[0] == 0);

    SurgeryPlan bad;
    bad.deletions = {0}; // rim vertices are external
    bool threw = false;
    try {
        apply_plan(identity_of(g), bad);
    } catch (const Error& e) {
        threw = true;
        CHECK(e.kind() == ErrorKind::NotInternal);
    }
    CHECK(threw);
}

TEST_CASE("identification refuses merged edges and loops") {
    // path 1-2-3: identifying 1 and 3 would double the edge to 2
    PlaneGraph path = parse_pg_string("vertices: 3\n1: 2\n2: 1 3\n3: 2\nouter: 1 2\n");
    SurgeryPlan plan;
    plan.action = SurgeryPlan::Action::Identify;
    plan.a = 0;
    plan.b = 2;
    bool threw = false;
    try {
        apply_plan(identity_of(path), plan);
    } catch (const Error& e) {
        threw = true;
        CHECK(e.kind() == ErrorKind::WouldMergeEdges);
    }
    CHECK(threw);

    // adjacent vertices: loop
    SurgeryPlan loop;
    loop.action = SurgeryPlan::Action::Identify;
    loop.a = 0;
    loop.b = 1;
    threw = false;
    try {
        apply_plan(identity_of(path), loop);
    } catch (const Error& e) {
        threw = true;
        CHECK(e.kind() == ErrorKind::WouldCreateLoop);
    }
    CHECK(threw);
}

TEST_CASE("identifying across a C6 with an explicit slot makes a bowtie") {
    PlaneGraph c6 = fixtures::cycle(6);
    SurgeryPlan plan;
    plan.action = SurgeryPlan::Action::Identify;
    plan.a = 0;
    plan.b = 3;
    // both faces contain both vertices: ambiguous without a slot
    CHECK_THROWS_AS(apply_plan(identity_of(c6), plan), Error);
    plan.slot_face = 0;
    ApplyResult r = apply_plan(identity_of(c6), plan);
    CHECK(r.lg.g().num_vertices() == 5);
    CHECK(r.lg.g().num_edges() == 6);
    CHECK(r.lg.g().num_faces() == 3);
    CHECK(r.old_to_new[0] == r.old_to_new[3]);
    int z = r.old_to_new[0];
    CHECK(r.lg.g().degree(z) == 4);
}

TEST_CASE("inserting an arc splits the slot face and carries its sign") {
    PlaneGraph c6 = fixtures::cycle(6);
    SurgeryPlan plan;
    plan.action = SurgeryPlan::Action::InsertArc;
    plan.a = 0;
    plan.b = 2;
    plan.arc_sign = Perm::from_word("231");
    plan.slot_face = 0;
    LabelledGraph lg = identity_of(c6);
    int old_edges = c6.num_edges();
    ApplyResult r = apply_plan(lg, plan);
    CHECK(r.lg.g().num_edges() == old_edges + 1);
    CHECK(r.lg.g().num_faces() == 3);
    int d = r.lg.g().dart_between(0, 2);
    REQUIRE(d >= 0);
    CHECK(r.lg.along(d) == Perm::from_word("231"));
    // untouched edges keep their signs (identity here)
    for (int e = 0; e < r.lg.g().num_edges(); ++e)
        if (e != PlaneGraph::edge_of(d)) CHECK(r.lg.sigma[e].is_identity());

    SurgeryPlan dup;
    dup.action = SurgeryPlan::Action::InsertArc;
    dup.a = 0;
    dup.b = 1;
    CHECK_THROWS_AS(apply_plan(lg, dup), Error); // parallel edge
}

TEST_CASE("safety: operations touching the boundary are flagged") {
    PlaneGraph c6 = fixtures::cycle(6);
    SurgeryPlan plan;
    plan.action = SurgeryPlan::Action::InsertArc;
    plan.a = 0;
    plan.b = 2;
    plan.slot_face = 0;
    SafetyReport rep = check_safety(identity_of(c6), plan);
    CHECK_FALSE(rep.condition_a); // new edge joins two boundary vertices
    CHECK_FALSE(rep.condition_b); // creates a triangle (a 9^- cycle)
    CHECK_FALSE(rep.created_short_cycle.empty());
}

TEST_CASE("the light-5-face operation passes both safety conditions") {
    PlaneGraph web = fixtures::light5_web();
    LabelledGraph lg = identity_of(web);
    // the pentagon is vertices 1..5; its marked neighbours are 7 and 10
    SurgeryPlan plan;
    plan.deletions = {0, 1, 2, 3, 4};
    plan.action = SurgeryPlan::Action::InsertArc;
    plan.a = 6;  // vertex 7
    plan.b = 9;  // vertex 10
    plan.arc_sign = Perm::identity(3);

    SafetyReport rep = check_safety(lg, plan);
    CHECK(rep.condition_a);
    CHECK(rep.condition_b);
    CHECK(rep.result_class.in_class_g);
    CHECK(rep.result.lg.g().num_vertices() == 29);

    // the result matches a hand-built expected embedding: the ring with the
    // new arc splitting its inside into a 10-face and an 11-face
    auto run = [](std::vector<int> v) { return v; };
    std::vector<std::vector<int>> expected_faces;
    expected_faces.push_back(run({1, 9, 2, 10, 11, 12, 13, 3, 14, 4}));
    expected_faces.push_back(run({4, 15, 16, 17, 18, 0, 5, 6, 7, 8, 1}));
    expected_faces.push_back(run({11, 10, 2, 9, 1, 8, 7, 6, 19, 20, 21, 22, 23, 24}));
    expected_faces.push_back(run({6, 5, 0, 18, 17, 16, 15, 4, 14, 3, 13, 12, 11, 24, 25, 26, 27, 28, 19}));
    expected_faces.push_back(run({19, 28, 27, 26, 25, 24, 23, 22, 21, 20}));
    PlaneGraph expected = fixtures::from_faces(29, expected_faces, 4);

    const PlaneGraph& got = rep.result.lg.g();
    REQUIRE(got.num_vertices() == expected.num_vertices());
    REQUIRE(got.num_edges() == expected.num_edges());
    auto canonical_rotation = [](const PlaneGraph& g, int v) {
        std::vector<int> r;
        for (int d : g.rotation(v)) r.push_back(g.head(d));
        std::vector<int> best = r;
        for (size_t i = 1; i < r.size(); ++i) {
            std::rotate(r.begin(), r.begin() + 1, r.end());
            best = std::min(best, r);
        }
        return best;
    };
    for (int v = 0; v < got.num_vertices(); ++v)
        CHECK(canonical_rotation(got, v) == canonical_rotation(expected, v));
    std::multiset<int> got_sizes, want_sizes;
    for (int f = 0; f < got.num_faces(); ++f) got_sizes.insert(got.face_size(f));
    for (int f = 0; f < expected.num_faces(); ++f) want_sizes.insert(expected.face_size(f));
    CHECK(got_sizes == want_sizes);
}

TEST_CASE("the bad-face path operation passes both safety conditions") {
    PlaneGraph web = fixtures::lemma10_web();
    LabelledGraph lg = identity_of(web);
    REQUIRE(bad_3_faces(lg).size() == 1);
    // u,v,x,y,z are vertices 1,2,4,5,6; x' = 9 is identified with u' = 7
    SurgeryPlan plan;
    plan.deletions = {0, 1, 3, 4, 5};
    plan.action = SurgeryPlan::Action::Identify;
    plan.a = 8; // x'
    plan.b = 6; // u'

    SafetyReport rep = check_safety(lg, plan);
    CHECK(rep.condition_a);
    CHECK(rep.condition_b);
    CHECK(rep.result_class.in_class_g);
    CHECK(rep.result.lg.g().num_vertices() == 42 - 5 - 1);
    CHECK(rep.result.old_to_new[8] == rep.result.old_to_new[6]);
}

TEST_CASE("deletion commutes with identification on disjoint supports") {
    PlaneGraph web = fixtures::lemma10_web();
    LabelledGraph lg = identity_of(web);
    SurgeryPlan both;
    both.deletions = {0, 1, 3, 4, 5};
    both.action = SurgeryPlan::Action::Identify;
    both.a = 8;
    both.b = 6;
    ApplyResult combined = apply_plan(lg, both);

    SurgeryPlan del_first;
    del_first.deletions = {0, 1, 3, 4, 5};
    ApplyResult mid = apply_plan(lg, del_first);
    SurgeryPlan then_identify;
    then_identify.action = SurgeryPlan::Action::Identify;
    then_identify.a = mid.old_to_new[8];
    then_identify.b = mid.old_to_new[6];
    ApplyResult two_step = apply_plan(mid.lg, then_identify);

    CHECK(to_pg(combined.lg.g()) == to_pg(two_step.lg.g()));
}

TEST_CASE("plan files parse") {
    SurgeryPlan p = parse_plan_string("# drop the pentagon\ndelete: 1 2 3 4 5\ninsert: 7 10 123\n");
    CHECK(p.deletions == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(p.action == SurgeryPlan::Action::InsertArc);
    CHECK(p.a == 6);
    CHECK(p.b == 9);
    CHECK(p.arc_sign.is_identity());
    SurgeryPlan q = parse_plan_string("identify: 9 7\nslot: 2\n");
    CHECK(q.action == SurgeryPlan::Action::Identify);
    CHECK(q.slot_face == 1);
    CHECK_THROWS_AS(parse_plan_string("identify: 1 2\ninsert: 3 4\n"), Error);
    CHECK_THROWS_AS(parse_plan_string("frobnicate: 1\n"), Error);
}
