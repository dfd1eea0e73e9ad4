#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "dpc/plane_graph.hpp"

namespace dpc {

// Random plane graphs avoiding the forbidden cycle lengths, grown by
// repeated face splitting: insert a path between two occurrences on a face
// walk, rejecting any split that would close a forbidden cycle. The
// embedding is canonical by construction and output is deterministic for a
// fixed seed. The distribution is not uniform; coverage is what matters.
struct GenConfig {
    int target_vertices = 10;
    std::set<int> forbidden_lengths = {4, 7, 9};
    std::uint64_t seed = 1;
    int max_attempts = 100000;
    int max_cyclomatic = -1; // < 0: unlimited; each split adds one
    int max_path_edges = 4;  // longest inserted path
};

PlaneGraph generate(const GenConfig& cfg);

} // namespace dpc
