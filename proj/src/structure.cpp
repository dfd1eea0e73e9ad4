#include "dpc/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dpc {

namespace {

// Face walks of the sub-embedding induced by keeping only `keep_edge` edges;
// rotations are inherited from g. Returns walks as dart sequences.
std::vector<std::vector<int>> sub_embedding_faces(const PlaneGraph& g, const std::vector<char>& keep_edge) {
    std::vector<int> next_kept(g.num_darts(), -1); // restricted rot_next
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& rot = g.rotation(v);
        std::vector<int> kept;
        for (int d : rot)
            if (keep_edge[PlaneGraph::edge_of(d)]) kept.push_back(d);
        for (size_t i = 0; i < kept.size(); ++i) next_kept[kept[i]] = kept[(i + 1) % kept.size()];
    }
    std::vector<char> visited(g.num_darts(), 0);
    std::vector<std::vector<int>> walks;
    for (int d0 = 0; d0 < g.num_darts(); ++d0) {
        if (!keep_edge[PlaneGraph::edge_of(d0)] || visited[d0]) continue;
        std::vector<int> walk;
        int d = d0;
        do {
            visited[d] = 1;
            walk.push_back(d);
            d = next_kept[PlaneGraph::twin(d)];
        } while (d != d0);
        walks.push_back(std::move(walk));
    }
    return walks;
}

// -1 on C, 1 interior, 0 exterior
std::vector<int> vertex_sides(const PlaneGraph& g, const Cycle& c) {
    SidePartition part = side_partition(g, c);
    std::vector<int> side(g.num_vertices(), -1);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (c.contains(v)) continue;
        side[v] = part.face_interior[g.face_of(g.rotation(v)[0])] ? 1 : 0;
    }
    return side;
}

bool side_wanted(int s, Side want) {
    if (want == Side::Both) return true;
    return (want == Side::Interior) == (s == 1);
}

std::vector<int> cells_of_config(const PlaneGraph& g, const Cycle& c, const std::vector<int>& config_edges,
                                 const std::vector<int>& centers) {
    std::vector<char> keep(g.num_edges(), 0);
    for (int e : c.edge_ids(g)) keep[e] = 1;
    for (int e : config_edges) keep[e] = 1;
    std::vector<char> is_center(g.num_vertices(), 0);
    for (int v : centers) is_center[v] = 1;
    std::vector<int> cells;
    for (const auto& walk : sub_embedding_faces(g, keep)) {
        bool has_center = false;
        for (int d : walk)
            if (is_center[g.tail(d)]) has_center = true;
        if (has_center) cells.push_back(static_cast<int>(walk.size()));
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

} // namespace

std::vector<ClawFinding> find_claws(const PlaneGraph& g, const Cycle& c, Side side) {
    std::vector<int> sides = vertex_sides(g, c);
    std::vector<ClawFinding> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (c.contains(v) || !side_wanted(sides[v], side)) continue;
        std::vector<int> att;
        for (int w : g.neighbors(v))
            if (c.contains(w)) att.push_back(w);
        if (att.size() < 3) continue;
        // every 3-subset of attachments is a claw
        int t = static_cast<int>(att.size());
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                for (int l = j + 1; l < t; ++l) {
                    std::vector<int> edges = {
                        PlaneGraph::edge_of(g.dart_between(v, att[i])),
                        PlaneGraph::edge_of(g.dart_between(v, att[j])),
                        PlaneGraph::edge_of(g.dart_between(v, att[l]))};
                    std::vector<int> cells = cells_of_config(g, c, edges, {v});
                    ClawFinding f;
                    f.center = v;
                    f.attachments = {att[i], att[j], att[l]};
                    std::copy_n(cells.begin(), 3, f.cells.begin());
                    f.side = sides[v] == 1 ? Side::Interior : Side::Exterior;
                    out.push_back(f);
                }
    }
    return out;
}

std::vector<BiclawFinding> find_biclaws(const PlaneGraph& g, const Cycle& c, Side side) {
    std::vector<int> sides = vertex_sides(g, c);
    std::vector<BiclawFinding> out;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u1, u2] = g.edge_endpoints(e);
        if (c.contains(u1) || c.contains(u2)) continue;
        if (!side_wanted(sides[u1], side)) continue; // adjacent => same side
        auto attachments_on_c = [&](int u) {
            std::vector<int> att;
            for (int w : g.neighbors(u))
                if (c.contains(w)) att.push_back(w);
            return att;
        };
        std::vector<int> a1 = attachments_on_c(u1), a2 = attachments_on_c(u2);
        if (a1.size() < 2 || a2.size() < 2) continue;
        for (size_t i = 0; i < a1.size(); ++i)
            for (size_t j = i + 1; j < a1.size(); ++j)
                for (size_t p = 0; p < a2.size(); ++p)
                    for (size_t q = p + 1; q < a2.size(); ++q) {
                        std::vector<int> edges = {
                            e,
                            PlaneGraph::edge_of(g.dart_between(u1, a1[i])),
                            PlaneGraph::edge_of(g.dart_between(u1, a1[j])),
                            PlaneGraph::edge_of(g.dart_between(u2, a2[p])),
                            PlaneGraph::edge_of(g.dart_between(u2, a2[q]))};
                        std::vector<int> cells = cells_of_config(g, c, edges, {u1, u2});
                        if (cells.size() != 4) continue; // degenerate overlap, not a biclaw shape
                        BiclawFinding f;
                        f.centers = {u1, u2};
                        f.attachments = {{{a1[i], a1[j]}, {a2[p], a2[q]}}};
                        std::copy_n(cells.begin(), 4, f.cells.begin());
                        f.side = sides[u1] == 1 ? Side::Interior : Side::Exterior;
                        out.push_back(f);
                    }
    }
    return out;
}

bool is_good_cycle(const PlaneGraph& g, const Cycle& c) {
    if (c.length() > 13)
        fail(ErrorKind::CycleTooLong, "cycle of length " + std::to_string(c.length()) +
                                          " is neither good nor bad");
    return find_claws(g, c, Side::Interior).empty() && find_biclaws(g, c, Side::Interior).empty();
}

std::vector<std::vector<int>> classify_bad_cycle(const PlaneGraph& g, const Cycle& c) {
    if (c.length() > 13) fail(ErrorKind::CycleTooLong, "cycle too long");
    std::vector<std::vector<int>> shapes;
    for (const ClawFinding& f : find_claws(g, c, Side::Interior))
        shapes.emplace_back(f.cells.begin(), f.cells.end());
    for (const BiclawFinding& f : find_biclaws(g, c, Side::Interior))
        shapes.emplace_back(f.cells.begin(), f.cells.end());
    return shapes;
}

std::vector<SpecialSubgraph> special_subgraphs(const PlaneGraph& g) {
    std::vector<SpecialSubgraph> out;
    int f0 = g.outer_face();
    for (int t = 0; t < g.num_faces(); ++t) {
        if (t == f0 || g.face_size(t) != 3) continue;
        for (int d : g.face_darts(t)) {
            int f = g.face_of(PlaneGraph::twin(d));
            if (f == f0 || g.face_size(f) != 5) continue;
            // shared edges between t and f
            std::vector<int> shared;
            for (int dt : g.face_darts(t))
                if (g.face_of(PlaneGraph::twin(dt)) == f) shared.push_back(PlaneGraph::edge_of(dt));
            if (shared.size() != 1) continue;
            std::vector<int> tri = g.face_vertices(t), pent = g.face_vertices(f);
            std::set<int> all(tri.begin(), tri.end());
            all.insert(pent.begin(), pent.end());
            if (all.size() != 6) continue;
            SpecialSubgraph s;
            s.face3 = t;
            s.face5 = f;
            int v2 = g.tail(d), v6 = g.head(d);
            s.shared_edge = {std::min(v2, v6), std::max(v2, v6)};
            // v1 = apex of the triangle
            for (int x : tri)
                if (x != v2 && x != v6) s.v[0] = x;
            // pentagon in walk order starting from the shared edge
            std::vector<int> order;
            int start = 0;
            const auto& pd = g.face_darts(f);
            for (size_t i = 0; i < pd.size(); ++i)
                if (PlaneGraph::edge_of(pd[i]) == PlaneGraph::edge_of(d)) start = static_cast<int>(i);
            for (size_t i = 0; i < pd.size(); ++i) order.push_back(g.tail(pd[(start + i) % pd.size()]));
            for (int i = 0; i < 5; ++i) s.v[i + 1] = order[i];
            out.push_back(s);
        }
    }
    // each pair found once (we scanned triangles)
    return out;
}

std::vector<int> h_counts(const PlaneGraph& g) {
    std::vector<int> h(g.num_vertices(), 0);
    for (const SpecialSubgraph& s : special_subgraphs(g))
        for (int v : s.v) ++h[v];
    return h;
}

int h_of(const PlaneGraph& g, int v) {
    g.check_vertex(v);
    return h_counts(g)[v];
}

std::vector<int> light_faces(const PlaneGraph& g) {
    std::vector<int> out;
    for (int f = 0; f < g.num_faces(); ++f) {
        if (f == g.outer_face()) continue;
        bool light = true;
        for (int d : g.face_darts(f)) {
            int v = g.tail(d);
            if (g.is_external(v) || g.degree(v) != 3) light = false;
        }
        if (light) out.push_back(f);
    }
    return out;
}

std::vector<int> bad_3_faces(const LabelledGraph& lg) {
    const PlaneGraph& g = lg.g();
    std::vector<char> special_face(g.num_faces(), 0);
    for (const SpecialSubgraph& s : special_subgraphs(g)) {
        special_face[s.face3] = 1;
        special_face[s.face5] = 1;
    }
    std::vector<int> out;
    for (int f : light_faces(g)) {
        if (g.face_size(f) != 3 || special_face[f]) continue;
        if (is_positive(lg, Cycle(g, g.face_vertices(f)))) out.push_back(f);
    }
    return out;
}

std::vector<char> bad_vertex_flags(const LabelledGraph& lg) {
    std::vector<char> bad(lg.g().num_vertices(), 0);
    for (int f : bad_3_faces(lg))
        for (int d : lg.g().face_darts(f)) bad[lg.g().tail(d)] = 1;
    return bad;
}

std::vector<StringFinding> all_strings(const PlaneGraph& g) {
    std::vector<char> is2(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) is2[v] = g.degree(v) == 2;

    std::vector<StringFinding> out;
    std::vector<char> used(g.num_vertices(), 0);

    auto faces_of_string = [&](const StringFinding& s) {
        std::set<int> fs;
        int v = s.path[0];
        for (int d : g.rotation(v)) fs.insert(g.face_of(d));
        return std::vector<int>(fs.begin(), fs.end());
    };

    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!is2[v] || used[v]) continue;
        // walk left as far as 2-vertices reach
        StringFinding s;
        int start = v;
        int prev = -1;
        // find an end (or detect the cyclic case)
        int cur = v;
        bool cyclic = false;
        while (true) {
            auto nb = g.neighbors(cur);
            int next = -1;
            for (int w : nb)
                if (w != prev && is2[w]) next = w;
            if (next == -1) break;
            if (next == start && prev != -1) {
                cyclic = true;
                break;
            }
            prev = cur;
            cur = next;
            if (cur == start) {
                cyclic = true;
                break;
            }
        }
        if (cyclic) {
            // the whole graph is a cycle of 2-vertices
            s.cyclic = true;
            int p = -1, c2 = start;
            do {
                s.path.push_back(c2);
                used[c2] = 1;
                auto nb = g.neighbors(c2);
                int nxt = nb[0] == p ? nb[1] : nb[0];
                p = c2;
                c2 = nxt;
            } while (c2 != start);
            s.faces = faces_of_string(s);
            out.push_back(std::move(s));
            continue;
        }
        // `cur` is one end; walk to the other, collecting
        prev = -1;
        // the outside neighbor(s) of the end: non-2 neighbors
        int w = cur;
        int came_from = -1;
        while (true) {
            s.path.push_back(w);
            used[w] = 1;
            int next = -1;
            for (int x : g.neighbors(w)) {
                if (x == came_from) continue;
                if (is2[x] && !used[x]) next = x;
            }
            if (next == -1) break;
            came_from = w;
            w = next;
        }
        for (int x : g.neighbors(s.path.front()))
            if (!is2[x]) s.anchors.push_back(x);
        if (s.path.size() >= 2)
            for (int x : g.neighbors(s.path.back()))
                if (!is2[x]) s.anchors.push_back(x);
        s.faces = faces_of_string(s);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<StringFinding> strings_of_face(const PlaneGraph& g, int f) {
    std::vector<StringFinding> out;
    for (StringFinding& s : all_strings(g))
        if (std::find(s.faces.begin(), s.faces.end(), f) != s.faces.end()) out.push_back(std::move(s));
    return out;
}

StringLemmaReport check_string_lemma(const PlaneGraph& g) {
    StringLemmaReport rep;
    for (const StringFinding& s : all_strings(g)) {
        for (int f : s.faces) {
            if (f == g.outer_face()) continue;
            int k = g.face_size(f);
            if (k < 3 || k > 12) continue;
            if (s.length() >= (k - 1) / 2) {
                rep.violations.push_back({f, s});
                rep.ok = false;
            }
        }
    }
    return rep;
}

Cycle boundary_cycle(const PlaneGraph& g) {
    std::vector<int> walk = g.face_vertices(g.outer_face());
    std::set<int> distinct(walk.begin(), walk.end());
    if (distinct.size() != walk.size())
        fail(ErrorKind::BoundaryNotCycle, "outer face walk repeats a vertex");
    return Cycle(g, walk);
}

bool LemmaPredicates::all_hold() const {
    for (auto& [name, ok] : named())
        if (!ok) return false;
    return true;
}

std::vector<std::pair<std::string, bool>> LemmaPredicates::named() const {
    return {
        {"no_separating_good_cycle", no_separating_good_cycle},
        {"two_connected", two_connected},
        {"internal_min_degree_3", internal_min_degree_3},
        {"boundary_chordless", boundary_chordless},
        {"string_lemma", string_lemma},
        {"splitting_lemma", splitting_lemma},
        {"no_negative_light_3face", no_negative_light_3face},
        {"no_light_5face", no_light_5face},
        {"bad_vertex_outer_ok", bad_vertex_outer_ok},
    };
}

std::vector<std::string> LemmaPredicates::failed() const {
    std::vector<std::string> out;
    for (auto& [name, ok] : named())
        if (!ok) out.push_back(name);
    return out;
}

LemmaPredicates lemma_predicates(const LabelledGraph& lg) {
    const PlaneGraph& g = lg.g();
    if (!classify(g).in_class_g) fail(ErrorKind::NotInClassG, "graph has 4-, 7-, or 9-cycles");
    Cycle u = boundary_cycle(g);
    if (!is_good_cycle(g, u)) fail(ErrorKind::BoundaryNotGood, "outer boundary is a bad cycle");

    LemmaPredicates p;

    p.no_separating_good_cycle = true;
    for (const Cycle& c : enumerate_cycles(g, 13))
        if (is_separating(g, c) && is_good_cycle(g, c)) p.no_separating_good_cycle = false;

    p.two_connected = g.is_two_connected();

    p.internal_min_degree_3 = true;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.is_external(v) && g.degree(v) < 3) p.internal_min_degree_3 = false;

    p.boundary_chordless = chords(g, u).empty();
    p.string_lemma = check_string_lemma(g).ok;
    p.splitting_lemma = check_splitting_lemma(g, u).all_satisfied;

    p.no_negative_light_3face = true;
    p.no_light_5face = true;
    for (int f : light_faces(g)) {
        if (g.face_size(f) == 3 && !is_positive(lg, Cycle(g, g.face_vertices(f))))
            p.no_negative_light_3face = false;
        if (g.face_size(f) == 5) p.no_light_5face = false;
    }

    p.bad_vertex_outer_ok = true;
    std::vector<char> bad = bad_vertex_flags(lg);
    for (int f : bad_3_faces(lg)) {
        std::vector<int> tri = g.face_vertices(f);
        for (int v : tri) {
            for (int w : g.neighbors(v)) {
                bool on_face = std::find(tri.begin(), tri.end(), w) != tri.end();
                if (!on_face && bad[w]) p.bad_vertex_outer_ok = false;
            }
        }
    }
    return p;
}

} // namespace dpc
