#pragma once

#include <vector>

#include "dpc/plane_graph.hpp"

namespace dpc::fixtures {

// Builds an embedding from its face walks (0-based vertex cycles). Every
// directed edge must occur exactly once across all walks; faces[outer]
// becomes f0. This pins configurations exactly as drawn.
PlaneGraph from_faces(int n, const std::vector<std::vector<int>>& faces, int outer);

PlaneGraph cycle(int n);
PlaneGraph k3();
PlaneGraph k4();            // triangle plus a hub
PlaneGraph w5();            // 5-wheel, outer face the rim
PlaneGraph prism();         // triangular prism, outer face a triangle
PlaneGraph h_graph();       // 3-face and 5-face glued on one edge, outer the 6-walk
PlaneGraph dodecahedron();

// Cycle of length `n` with one interior hub attached at cumulative arc
// positions; arcs must sum to n. Yields the (a1+2, a2+2, a3+2) claw.
PlaneGraph claw_fixture(int n, int arc1, int arc2, int arc3);
PlaneGraph biclaw_5558(); // the 13-cycle biclaw with cells {5,5,5,8}

// Two hubs joined by three disjoint paths of p, q, r edges; the outer face
// is the (p+r)-walk. Carries (p-1)- and (q-1)- and (r-1)-strings.
PlaneGraph theta(int p, int q, int r);

// Pentagon with an outside 3-path; the outer face is the 5-walk through the
// path, leaving a 2-vertex on both the outer face and a bounded 5-face.
PlaneGraph pent_string();

// 10-cycle with a chord between antipodal vertices (two bounded 6-faces).
PlaneGraph c10_chord();

// Pentagon of internal 3-vertices inside a 19-ring, hung inside a 10-ring.
// The pentagon is a light 5-face; removing it leaves its two marked
// neighbours (vertices 7 and 10) at distance 9.
PlaneGraph light5_web();

// Triangle of internal 3-vertices (a bad 3-face under the identity
// signature) with a pendant 3-vertex chain, inside a 24-ring and a 12-ring.
// Supports the delete-five-and-identify operation safely.
PlaneGraph lemma10_web();

} // namespace dpc::fixtures
