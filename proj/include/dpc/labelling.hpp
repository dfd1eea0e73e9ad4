#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "dpc/cycles.hpp"
#include "dpc/perm.hpp"
#include "dpc/plane_graph.hpp"

namespace dpc {

// A plane graph together with an orientation and a permutation per edge.
// along(d) is the permutation acting in the direction of dart d; reversing
// a dart inverts it. Immutable; share the underlying graph freely.
struct LabelledGraph {
    std::shared_ptr<const PlaneGraph> graph;
    int k = 3;
    std::vector<int> forward; // edge -> forward dart
    std::vector<Perm> sigma;  // edge -> sign on the forward dart

    const PlaneGraph& g() const { return *graph; }

    Perm along(int dart) const {
        int e = PlaneGraph::edge_of(dart);
        return forward[e] == dart ? sigma[e] : sigma[e].inverse();
    }

    bool edge_positive(int e) const { return sigma[e].is_identity(); }
};

LabelledGraph all_identity(std::shared_ptr<const PlaneGraph> g, int k);
LabelledGraph all_identity(const PlaneGraph& g, int k); // copies the graph

// Switch vertex u by sign s: arcs leaving u pick up s on the tail side,
// arcs entering u pick up s^-1 on the head side. Preserves colorability and
// cycle positivity; a coloring transforms by recoloring u only.
LabelledGraph switch_vertex(const LabelledGraph& lg, int u, const Perm& s);

// Composition of the signs along C starting at basepoint, following the
// cycle's stored orientation. Identity-ness is basepoint-independent.
Perm monodromy(const LabelledGraph& lg, const Cycle& c, int basepoint);
bool is_positive(const LabelledGraph& lg, const Cycle& c);

struct SwitchStep {
    int vertex;
    Perm sign;
};

struct NormalizeResult {
    LabelledGraph lg;                 // switch-equivalent, spanning tree all-identity
    std::vector<SwitchStep> switches; // replayable witness
};

NormalizeResult normalize(const LabelledGraph& lg);

// Enumerates the tree-identity labellings: a fixed BFS spanning tree carries
// the identity, the free edges run through all (k!)^(|E|-|V|+1) sign tuples.
// Every labelling is switch-equivalent to at least one of these.
class SignatureClasses {
public:
    SignatureClasses(std::shared_ptr<const PlaneGraph> g, int k);

    std::uint64_t count() const { return count_; }
    int cyclomatic() const { return static_cast<int>(free_edges_.size()); }
    const std::vector<int>& free_edges() const { return free_edges_; }
    LabelledGraph labelling(std::uint64_t index) const;

private:
    std::shared_ptr<const PlaneGraph> g_;
    int k_;
    std::vector<int> free_edges_;
    std::uint64_t count_ = 1;
};

// `.sig` text format: lines "u v WORD" assign the image word WORD to the arc
// u->v; unlisted edges are identity oriented min-id -> max-id.
LabelledGraph parse_sig(std::istream& in, std::shared_ptr<const PlaneGraph> g, int default_k = 3);
LabelledGraph parse_sig_string(const std::string& text, std::shared_ptr<const PlaneGraph> g,
                               int default_k = 3);
LabelledGraph load_sig(const std::string& path, std::shared_ptr<const PlaneGraph> g,
                       int default_k = 3);
std::string to_sig(const LabelledGraph& lg); // non-identity edges only

} // namespace dpc
