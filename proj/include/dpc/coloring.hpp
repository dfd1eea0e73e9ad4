#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dpc/labelling.hpp"

namespace dpc {

// Partial or total assignment vertex -> color in [k]; 0 means uncolored.
struct Coloring {
    std::vector<int> assignment;

    int color(int v) const { return v < static_cast<int>(assignment.size()) ? assignment[v] : 0; }
    bool colored(int v) const { return color(v) != 0; }
};

struct SolveResult {
    bool found = false;       // exhausted otherwise: no extension exists
    Coloring witness;         // total when found
    std::uint64_t nodes = 0;  // assignments explored
};

// Complete backtracking search for a coloring with sigma_e(f(x)) != f(y) on
// every arc, extending `pre`. Vertex order: decreasing degree, then index;
// colors ascending; forward checking through the edge signs. Deterministic.
SolveResult solve(const LabelledGraph& lg, int k, const Coloring& pre = {});

struct SweepResult {
    bool all_colorable = true;
    std::uint64_t classes = 0;          // total signature classes
    std::uint64_t classes_checked = 0;  // scheduling-dependent when cancelled
    std::uint64_t nodes = 0;            // scheduling-dependent when cancelled
    std::optional<std::uint64_t> failing_class; // least failing index (deterministic)
    std::optional<LabelledGraph> witness;       // that class's labelling
};

// Decide S_k-k-colorability by sweeping all tree-identity signature classes.
// The serial sweep is the reference implementation; the parallel one
// distributes class blocks over OpenMP workers and must agree with it.
SweepResult sweep_signatures_serial(std::shared_ptr<const PlaneGraph> g, int k);
SweepResult sweep_signatures_parallel(std::shared_ptr<const PlaneGraph> g, int k, int jobs);
SweepResult is_dp_k_colorable(std::shared_ptr<const PlaneGraph> g, int k, int jobs = 1);

// Theorem-3 mode: boundary of f0 precolored, extension searched. The
// preconditions (class membership, good boundary cycle, proper boundary
// coloring) are checked; under them an extension must exist.
SolveResult extend_boundary(const LabelledGraph& lg, const Coloring& phi0);

struct TheoremReport {
    std::uint64_t classes = 0;
    bool dp3_colorable = false;
    std::optional<std::uint64_t> failing_class;
    std::optional<LabelledGraph> witness;
    double seconds = 0.0;
};

// Runs the DP-3-colorability sweep on a member of the class; rejects
// non-members (NotInClassG) naming a forbidden cycle.
TheoremReport verify_theorem(std::shared_ptr<const PlaneGraph> g, int jobs = 1);

} // namespace dpc
