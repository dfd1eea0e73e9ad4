#pragma once

#include <utility>
#include <vector>

#include "dpc/plane_graph.hpp"

namespace dpc {

// A simple cycle, stored in canonical form: the lexicographically least
// rotation of the lexicographically smaller of the two orientations.
class Cycle {
public:
    Cycle(const PlaneGraph& g, std::vector<int> verts); // validates against g
    const std::vector<int>& vertices() const { return verts_; }
    int length() const { return static_cast<int>(verts_.size()); }
    bool contains(int v) const;
    // Edge ids of the cycle in g.
    std::vector<int> edge_ids(const PlaneGraph& g) const;

    bool operator==(const Cycle&) const = default;

private:
    std::vector<int> verts_;
};

// All simple cycles of length <= max_len, each once, canonical form,
// sorted by (length, vertex sequence).
std::vector<Cycle> enumerate_cycles(const PlaneGraph& g, int max_len);

// Which side of C everything lies on, derived from the embedding: faces are
// joined across every edge not on C; the group containing f0 is the exterior.
struct SidePartition {
    std::vector<char> face_interior; // per face: 1 if on the side away from f0
    std::vector<int> interior;       // vertices strictly inside C
    std::vector<int> exterior;       // vertices strictly outside C
};

SidePartition side_partition(const PlaneGraph& g, const Cycle& c);
bool is_separating(const PlaneGraph& g, const Cycle& c);
std::vector<int> interior(const PlaneGraph& g, const Cycle& c);
std::vector<int> exterior(const PlaneGraph& g, const Cycle& c);

// Chords: edges of g joining two non-consecutive vertices of C.
std::vector<std::pair<int, int>> chords(const PlaneGraph& g, const Cycle& c);

struct SplitReport {
    std::vector<int> path;        // u1 .. uk, ends on C, interior off C
    std::vector<int> cycle_a;     // path + one arc of C
    std::vector<int> cycle_b;     // path + the other arc
    std::pair<int, int> lengths;  // |cycle_a|, |cycle_b|
    int path_length() const { return static_cast<int>(path.size()) - 1; }
};

// Splitting paths of C with path length (edge count) in [min_len, max_len].
// Length-1 paths are the chords.
std::vector<SplitReport> splitting_paths(const PlaneGraph& g, const Cycle& c, int max_len,
                                         int min_len = 1);

struct SplittingLemmaInstance {
    SplitReport split;
    bool satisfied = false; // one side length in [|P|+1, 2|P|-1]
};

struct SplittingLemmaReport {
    std::vector<SplittingLemmaInstance> instances; // paths with 2 <= |P| <= 5
    bool all_satisfied = true;
};

SplittingLemmaReport check_splitting_lemma(const PlaneGraph& g, const Cycle& u);

} // namespace dpc
