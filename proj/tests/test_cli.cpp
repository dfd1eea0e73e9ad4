#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("DPC_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string("\"") + bin + "\" " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
    const char* dir = std::getenv("DPC_FIXTURES");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/dpc_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("member exit codes follow the verdict") {
    CHECK(run("member " + fixture("h.pg")).exit_code == 0);
    RunResult c4 = run("member " + fixture("c4.pg"));
    CHECK(c4.exit_code == 1);
    CHECK(c4.out.find("in_class_g: false") != std::string::npos);
    CHECK(run("member /nonexistent.pg").exit_code == 2);
    CHECK(run("member " + fixture("dodecahedron.pg")).exit_code == 1);
}

TEST_CASE("dpcheck: direct verdicts vs. verify routing") {
    // C4 is DP-3-colorable even though it is not in the class
    CHECK(run("dpcheck --k 3 " + fixture("c4.pg")).exit_code == 0);
    CHECK(run("dpcheck --k 3 --verify " + fixture("c4.pg")).exit_code == 2);
    CHECK(run("dpcheck --k 2 " + fixture("c4.pg")).exit_code == 1);
    RunResult h = run("dpcheck --k 3 --jobs 2 " + fixture("h.pg"));
    CHECK(h.exit_code == 0);
    CHECK(h.out.find("classes: 36") != std::string::npos);
}

TEST_CASE("discharge prints an exact ledger") {
    RunResult r = run("discharge " + fixture("h.pg"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("sum_initial: 0/1") != std::string::npos);
    CHECK(r.out.find("sum_final: 0/1") != std::string::npos);
    CHECK(r.out.find("R1 ") != std::string::npos);
}

TEST_CASE("solve and extend") {
    CHECK(run("solve " + fixture("k4.pg")).exit_code == 1);
    CHECK(run("solve --k 4 " + fixture("k4.pg")).exit_code == 0);
    std::string pre = temp_file("h_phi0.txt", "1 1\n2 2\n3 1\n4 2\n5 1\n6 3\n");
    CHECK(run("extend --precolor " + pre + " " + fixture("h.pg")).exit_code == 0);
    std::string bad = temp_file("h_bad.txt", "1 1\n2 2\n3 1\n4 2\n5 1\n6 2\n");
    CHECK(run("extend --precolor " + bad + " " + fixture("h.pg")).exit_code == 2);
}

TEST_CASE("goodcycle and cycles") {
    RunResult claw = run("goodcycle --cycle 1,2,3,4,5,6,7,8,9,10,11,12 " + fixture("claw_3_5_10.pg"));
    CHECK(claw.exit_code == 1);
    CHECK(claw.out.find("shape_0: 3,5,10") != std::string::npos);
    CHECK(run("goodcycle --cycle 1,2,3 " + fixture("k3.pg")).exit_code == 0);
    RunResult cy = run("cycles --max 13 " + fixture("h.pg"));
    CHECK(cy.exit_code == 0);
    CHECK(cy.out.find("count: 3") != std::string::npos);
}

TEST_CASE("audit reports the failed predicates") {
    RunResult r = run("audit " + fixture("h.pg"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("contradiction_witnessed: true") != std::string::npos);
    CHECK(r.out.find("predicate_boundary_chordless: false") != std::string::npos);
}

TEST_CASE("surgery subcommand applies the shipped plans") {
    std::string plan = temp_file("light5.plan", "delete: 1 2 3 4 5\ninsert: 7 10 123\n");
    RunResult r = run("surgery --plan " + plan + " " + fixture("light5.pg"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("condition_a: true") != std::string::npos);
    CHECK(r.out.find("condition_b: true") != std::string::npos);

    std::string merge = temp_file("merge.plan", "identify: 1 3\n");
    RunResult m = run("surgery --plan " + merge + " " + fixture("c5.pg"));
    CHECK(m.exit_code == 2);
    CHECK(m.out.find("WouldMergeEdges") != std::string::npos);
}

TEST_CASE("gen is deterministic and emits members") {
    RunResult a = run("gen --n 14 --seed 5");
    RunResult b = run("gen --n 14 --seed 5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    std::string path = temp_file("gen.pg", a.out);
    CHECK(run("member " + path).exit_code == 0);
}

TEST_CASE("json output") {
    RunResult r = run("--json member " + fixture("h.pg"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"in_class_g\": \"true\"") != std::string::npos);
}

TEST_CASE("info and report smoke") {
    RunResult info = run("info " + fixture("lemma10.pg"));
    CHECK(info.exit_code == 0);
    CHECK(info.out.find("vertices: 42") != std::string::npos);
    RunResult rep = run("report " + fixture("lemma10.pg"));
    CHECK(rep.exit_code == 0);
    CHECK(rep.out.find("bad_3_faces: 1") != std::string::npos);
}
