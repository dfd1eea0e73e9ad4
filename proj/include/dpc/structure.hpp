#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dpc/cycles.hpp"
#include "dpc/labelling.hpp"
#include "dpc/plane_graph.hpp"

namespace dpc {

enum class Side { Interior, Exterior, Both };

// One interior (or exterior) vertex with three neighbours on C. The cells
// are the faces the configuration cuts its side of C into; their lengths
// always sum to |C| + 6.
struct ClawFinding {
    int center = -1;
    std::array<int, 3> attachments{};
    std::array<int, 3> cells{}; // sorted lengths
    Side side = Side::Interior;
};

// Two adjacent off-cycle vertices with two attachments each; cell lengths
// sum to |C| + 10 (the centre edge lies on two cells).
struct BiclawFinding {
    std::array<int, 2> centers{};
    std::array<std::array<int, 2>, 2> attachments{};
    std::array<int, 4> cells{}; // sorted lengths
    Side side = Side::Interior;
};

std::vector<ClawFinding> find_claws(const PlaneGraph& g, const Cycle& c, Side side);
std::vector<BiclawFinding> find_biclaws(const PlaneGraph& g, const Cycle& c, Side side);

// A good cycle is a 13^- cycle with neither claws nor biclaws on the side
// away from f0 (the side every use in this toolkit cares about).
bool is_good_cycle(const PlaneGraph& g, const Cycle& c);
// Cell multisets of all claws/biclaws found; empty means good.
std::vector<std::vector<int>> classify_bad_cycle(const PlaneGraph& g, const Cycle& c);

// Adjacent (3-face, 5-face) pair sharing exactly one edge; v1 is the apex of
// the triangle, [v2..v6] the pentagon, v2v6 the shared edge.
struct SpecialSubgraph {
    int face3 = -1;
    int face5 = -1;
    std::array<int, 6> v{};
    std::pair<int, int> shared_edge{};
};

std::vector<SpecialSubgraph> special_subgraphs(const PlaneGraph& g);
std::vector<int> h_counts(const PlaneGraph& g); // h(v) = #special subgraphs containing v
int h_of(const PlaneGraph& g, int v);

// Faces (other than f0) whose incident vertices are all internal 3-vertices.
std::vector<int> light_faces(const PlaneGraph& g);

// Positive light non-special 3-faces, and their vertices.
std::vector<int> bad_3_faces(const LabelledGraph& lg);
std::vector<char> bad_vertex_flags(const LabelledGraph& lg);

// Maximal run of degree-2 vertices. If the whole graph is a cycle the run
// wraps; it then has no anchors and counts as a k-string of full length.
struct StringFinding {
    std::vector<int> path;    // the 2-vertices, in path order
    std::vector<int> anchors; // adjacent non-2-vertices (size 2, 1 shared anchor never occurs, or 0 if cyclic)
    bool cyclic = false;
    std::vector<int> faces;   // distinct faces whose boundary carries the string
    int length() const { return static_cast<int>(path.size()); }
};

std::vector<StringFinding> all_strings(const PlaneGraph& g);
std::vector<StringFinding> strings_of_face(const PlaneGraph& g, int f);

struct StringLemmaViolation {
    int face = -1;
    StringFinding string;
};

struct StringLemmaReport {
    std::vector<StringLemmaViolation> violations; // t >= floor((k-1)/2) on a k-face, 3 <= k <= 12
    bool ok = true;
};

StringLemmaReport check_string_lemma(const PlaneGraph& g);

// Conclusions of the structural lemmas, each evaluated independently on the
// labelled graph with boundary cycle U (the f0 walk). Requires membership in
// the class (no 4-, 7-, 9-cycles) and a good boundary cycle.
struct LemmaPredicates {
    bool no_separating_good_cycle = false;
    bool two_connected = false;
    bool internal_min_degree_3 = false;
    bool boundary_chordless = false;
    bool string_lemma = false;
    bool splitting_lemma = false;
    bool no_negative_light_3face = false;
    bool no_light_5face = false;
    bool bad_vertex_outer_ok = false;

    bool all_hold() const;
    std::vector<std::pair<std::string, bool>> named() const;
    std::vector<std::string> failed() const;
};

LemmaPredicates lemma_predicates(const LabelledGraph& lg);

// The boundary walk of f0 as a cycle; BoundaryNotCycle if it repeats a vertex.
Cycle boundary_cycle(const PlaneGraph& g);

} // namespace dpc
