#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dpc/coloring.hpp"
#include "dpc/labelling.hpp"
#include "dpc/structure.hpp"

namespace dpc {

// All charge arithmetic is exact; floating point is forbidden here.
using Charge = boost::rational<long long>;

std::string charge_str(const Charge& c); // "n/d", lowest terms

struct Element {
    enum class Kind { Vertex, Face } kind;
    int id;

    static Element vertex(int v) { return {Kind::Vertex, v}; }
    static Element face(int f) { return {Kind::Face, f}; }
    bool operator==(const Element&) const = default;
};

struct Transfer {
    int rule; // 1..8
    Element from, to;
    Charge amount;
};

// Per-vertex counters used by the claim audits: incidences with non-special
// 3-faces (r1), 8-faces (r2), 10+ faces (r3), all excluding f0; adjacent bad
// vertices (b); special subgraphs containing the vertex (h); and non-special
// 5-faces or 6+ faces at the vertex sharing an edge with f0 (t).
struct VertexCounters {
    int r1 = 0, r2 = 0, r3 = 0, b = 0, h = 0, t = 0;
};

struct ChargeLedger {
    std::vector<Charge> vertex_initial, vertex_final;
    std::vector<Charge> face_initial, face_final;
    std::vector<Transfer> transfers; // recorded in rule order R1..R8
    std::vector<VertexCounters> counters;

    Charge total_initial() const;
    Charge total_final() const;
};

// ch(x) = d(x)+4 for x = f0, d(x)-4 otherwise; total is exactly zero.
ChargeLedger initial_charges(const PlaneGraph& g);

// Full run of rules R1..R8. All amounts depend only on the pre-discharging
// structure, so the rules commute; they are recorded in rule order.
ChargeLedger discharge(const LabelledGraph& lg);

// Replays the transfer list from the initial charges; used to check ledger
// integrity (must reproduce vertex_final / face_final exactly).
ChargeLedger replay(const PlaneGraph& g, const ChargeLedger& led);

// Lower bound g(k) for the face-to-anchor margin:
//   (k-4)/13              k in {6,8,10,12}
//   (k-4)/13-(1/k-1/13)   k = 11
//   (k-4)/k               k >= 13
Charge g_bound(int k);

struct SpecialCharge {
    SpecialSubgraph subgraph;
    Charge ch, ch_star; // sum of ch(v)/h(v) over the six vertices
};

std::vector<SpecialCharge> special_charges(const PlaneGraph& g, const ChargeLedger& led);

struct ClaimCheck {
    std::string claim;   // e.g. "claim2_internal", "formula3a"
    std::string subject; // element the instance is about
    bool holds = true;
    Charge lhs, rhs;     // lhs REL rhs with REL from the claim
    std::vector<std::string> depends_on; // lemma predicates the proof uses
};

struct ClaimReport {
    std::vector<ClaimCheck> checks;
    bool all_hold = true;
    std::vector<ClaimCheck> violations() const;
};

ClaimReport audit_claims(const LabelledGraph& lg, const ChargeLedger& led);

struct MetaReport {
    LemmaPredicates predicates;
    std::vector<std::string> failed_predicates; // must be nonempty under the preconditions
    bool contradiction_witnessed = false;       // some predicate failed
    bool anomaly = false;                       // all predicates held: would contradict conservation
    ClaimReport claims;
};

// Executes the closing argument: under the preconditions (class membership,
// good boundary cycle, an external 3+ vertex, and a proper boundary coloring
// when supplied) the lemma-conclusion predicates cannot all hold, because
// the claims would force a positive total against exact conservation.
MetaReport meta_audit(const LabelledGraph& lg, const std::optional<Coloring>& phi0 = std::nullopt);

// Deterministic ledger dump for golden tests and the CLI.
std::string ledger_text(const PlaneGraph& g, const ChargeLedger& led);

} // namespace dpc
