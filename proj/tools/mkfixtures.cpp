// Regenerates the fixture corpus under fixtures/.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "dpc/fixtures.hpp"

using namespace dpc;

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& name, const PlaneGraph& g) {
        std::ofstream out(dir / (name + ".pg"));
        out << to_pg(g);
        std::cout << name << ".pg: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
    };

    write("k3", fixtures::k3());
    write("c4", fixtures::cycle(4));
    write("c5", fixtures::cycle(5));
    write("c13", fixtures::cycle(13));
    write("k4", fixtures::k4());
    write("w5", fixtures::w5());
    write("prism", fixtures::prism());
    write("h", fixtures::h_graph());
    write("dodecahedron", fixtures::dodecahedron());
    write("claw_3_5_10", fixtures::claw_fixture(12, 1, 3, 8));
    write("claw_5_5_8", fixtures::claw_fixture(12, 3, 3, 6));
    write("claw_6_6_6", fixtures::claw_fixture(12, 4, 4, 4));
    write("claw_3_5_11", fixtures::claw_fixture(13, 1, 3, 9));
    write("biclaw_5_5_5_8", fixtures::biclaw_5558());
    write("pent_string", fixtures::pent_string());
    write("c10_chord", fixtures::c10_chord());
    write("light5", fixtures::light5_web());
    write("lemma10", fixtures::lemma10_web());
    write("string_k5", fixtures::theta(2, 3, 3));
    write("string_k6", fixtures::theta(3, 3, 3));
    write("string_k7", fixtures::theta(3, 4, 2));
    write("string_k8", fixtures::theta(3, 5, 3));
    write("string_k9", fixtures::theta(4, 5, 6));
    write("string_k10", fixtures::theta(5, 5, 3));
    write("string_k11", fixtures::theta(5, 6, 5));
    write("string_k12", fixtures::theta(6, 6, 5));
    return 0;
}
