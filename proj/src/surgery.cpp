#include "dpc/surgery.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dpc/cycles.hpp"
#include "dpc/structure.hpp"

namespace dpc {

namespace {

// The unique occurrence of v as a corner of face f; BadSlot when v occurs
// zero or several times on the walk.
int unique_corner(const PlaneGraph& g, int f, int v) {
    int pos = -1;
    const auto& walk = g.face_darts(f);
    for (size_t i = 0; i < walk.size(); ++i) {
        if (g.tail(walk[i]) != v) continue;
        if (pos >= 0) fail(ErrorKind::BadSlot, "vertex " + std::to_string(v + 1) + " occurs twice on the face");
        pos = static_cast<int>(i);
    }
    if (pos < 0) fail(ErrorKind::BadSlot, "vertex " + std::to_string(v + 1) + " not on the face");
    return pos;
}

// The face of `g` containing both a and b: the explicit override when given,
// otherwise the unique such face.
int slot_face(const PlaneGraph& g, int a, int b, const std::optional<int>& override_face) {
    if (override_face) {
        int f = *override_face;
        if (f < 0 || f >= g.num_faces()) fail(ErrorKind::BadSlot, "no such face");
        return f;
    }
    std::vector<int> candidates;
    for (int f = 0; f < g.num_faces(); ++f) {
        std::vector<int> vs = g.face_vertices(f);
        bool has_a = std::find(vs.begin(), vs.end(), a) != vs.end();
        bool has_b = std::find(vs.begin(), vs.end(), b) != vs.end();
        if (has_a && has_b) candidates.push_back(f);
    }
    if (candidates.empty()) fail(ErrorKind::BadSlot, "no face contains both vertices");
    if (candidates.size() > 1) fail(ErrorKind::BadSlot, "several faces contain both vertices");
    return candidates[0];
}

std::vector<std::vector<int>> neighbor_lists(const PlaneGraph& g) {
    std::vector<std::vector<int>> lists(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) lists[v] = g.neighbors(v);
    return lists;
}

// Rotation of v cut so that it starts with the corner dart `start_dart`
// (which leaves v on the given face walk), expressed as neighbor ids.
std::vector<int> rotation_from(const PlaneGraph& g, int v, int start_dart) {
    const auto& rot = g.rotation(v);
    int pos = -1;
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == start_dart) pos = static_cast<int>(i);
    std::vector<int> out;
    for (size_t i = 0; i < rot.size(); ++i) out.push_back(g.head(rot[(pos + i) % rot.size()]));
    return out;
}

} // namespace

ApplyResult apply_plan(const LabelledGraph& lg, const SurgeryPlan& plan) {
    const PlaneGraph& g = lg.g();

    std::vector<char> deleted(g.num_vertices(), 0);
    for (int v : plan.deletions) {
        g.check_vertex(v);
        if (g.is_external(v)) fail(ErrorKind::NotInternal, "vertex " + std::to_string(v + 1) + " is external");
        deleted[v] = 1;
    }
    if (plan.action != SurgeryPlan::Action::None) {
        g.check_vertex(plan.a);
        g.check_vertex(plan.b);
        if (deleted[plan.a] || deleted[plan.b])
            fail(ErrorKind::NotInternal, "action vertex is also deleted");
        if (plan.a == plan.b) fail(ErrorKind::WouldCreateLoop, "action joins a vertex with itself");
    }

    // Step 1: delete, compacting ids.
    std::vector<int> old_to_new(g.num_vertices(), -1);
    int next = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!deleted[v]) old_to_new[v] = next++;
    std::vector<std::vector<int>> lists(next);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (deleted[v]) continue;
        for (int w : g.neighbors(v))
            if (!deleted[w]) lists[old_to_new[v]].push_back(old_to_new[w]);
    }
    int outer_u = old_to_new[g.tail(g.outer_dart())];
    int outer_v = old_to_new[g.head(g.outer_dart())];
    PlaneGraph mid = build(lists, outer_u, outer_v); // rejects a disconnecting deletion

    int a = plan.action == SurgeryPlan::Action::None ? -1 : old_to_new[plan.a];
    int b = plan.action == SurgeryPlan::Action::None ? -1 : old_to_new[plan.b];

    std::vector<std::vector<int>> out_lists;
    int out_outer_u = outer_u, out_outer_v = outer_v;
    // Mapping from mid ids to result ids; identity except for identification.
    std::vector<int> mid_to_out(mid.num_vertices());
    for (int v = 0; v < mid.num_vertices(); ++v) mid_to_out[v] = v;

    switch (plan.action) {
        case SurgeryPlan::Action::None:
            out_lists = neighbor_lists(mid);
            break;
        case SurgeryPlan::Action::InsertArc: {
            if (mid.adjacent(a, b)) fail(ErrorKind::WouldMergeEdges, "arc endpoints already adjacent");
            int f = slot_face(mid, a, b, plan.slot_face);
            int pa = unique_corner(mid, f, a);
            int pb = unique_corner(mid, f, b);
            out_lists = neighbor_lists(mid);
            // Insert the new neighbor right before the corner's outgoing dart.
            auto insert_at = [&](int v, int corner_pos, int nb) {
                int d = mid.face_darts(f)[corner_pos];
                const auto& rot = mid.rotation(v);
                int idx = -1;
                for (size_t i = 0; i < rot.size(); ++i)
                    if (rot[i] == d) idx = static_cast<int>(i);
                out_lists[v].insert(out_lists[v].begin() + idx, nb);
            };
            insert_at(a, pa, b);
            insert_at(b, pb, a);
            break;
        }
        case SurgeryPlan::Action::Identify: {
            if (mid.adjacent(a, b)) fail(ErrorKind::WouldCreateLoop, "identifying adjacent vertices");
            for (int w : mid.neighbors(a)) {
                auto nb = mid.neighbors(b);
                if (std::find(nb.begin(), nb.end(), w) != nb.end())
                    fail(ErrorKind::WouldMergeEdges,
                         "vertices share the neighbor " + std::to_string(w + 1));
            }
            int f = slot_face(mid, a, b, plan.slot_face);
            int pa = unique_corner(mid, f, a);
            int pb = unique_corner(mid, f, b);
            // Merge the two fans, each cut open at its corner on f.
            std::vector<int> fan_a = rotation_from(mid, a, mid.face_darts(f)[pa]);
            std::vector<int> fan_b = rotation_from(mid, b, mid.face_darts(f)[pb]);
            int keep = std::min(a, b), drop = std::max(a, b);
            std::vector<int> merged = fan_a;
            merged.insert(merged.end(), fan_b.begin(), fan_b.end());
            // Renumber: drop disappears, everything above shifts down.
            auto renum = [&](int v) {
                if (v == drop) return keep > drop ? keep - 1 : keep;
                return v > drop ? v - 1 : v;
            };
            out_lists.assign(mid.num_vertices() - 1, {});
            for (int v = 0; v < mid.num_vertices(); ++v) {
                if (v == a || v == b) continue;
                for (int w : mid.neighbors(v)) out_lists[renum(v)].push_back(renum(w));
            }
            for (int w : merged) out_lists[renum(keep)].push_back(renum(w));
            for (int v = 0; v < mid.num_vertices(); ++v) mid_to_out[v] = renum(v == drop ? keep : v);
            out_outer_u = renum(outer_u);
            out_outer_v = renum(outer_v);
            break;
        }
    }

    PlaneGraph out = build(out_lists, out_outer_u, out_outer_v);
    // Planarity: a bad splice would change the Euler characteristic.
    if (out.num_vertices() - out.num_edges() + out.num_faces() != 2)
        fail(ErrorKind::BadSlot, "operation does not preserve planarity");

    for (int v = 0; v < g.num_vertices(); ++v)
        if (old_to_new[v] >= 0) old_to_new[v] = mid_to_out[old_to_new[v]];

    // Carry the signature across; the new arc gets the plan's sign.
    ApplyResult res{all_identity(std::make_shared<const PlaneGraph>(out), lg.k), old_to_new};
    std::map<std::pair<int, int>, std::pair<Perm, bool>> old_sign; // (min,max) -> (sigma, fwd is min->max)
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, w] = g.edge_endpoints(e);
        if (old_to_new[u] < 0 || old_to_new[w] < 0) continue;
        int nu = old_to_new[u], nw = old_to_new[w];
        int d = lg.forward[e];
        bool fwd_from_min = (g.tail(d) == u) == (nu < nw);
        old_sign[{std::min(nu, nw), std::max(nu, nw)}] = {lg.sigma[e], fwd_from_min};
    }
    for (int e = 0; e < out.num_edges(); ++e) {
        auto [u, w] = out.edge_endpoints(e);
        auto it = old_sign.find({std::min(u, w), std::max(u, w)});
        if (it == old_sign.end()) continue; // the inserted arc, handled below
        res.lg.sigma[e] = it->second.first;
        int min_dart = out.dart_between(std::min(u, w), std::max(u, w));
        res.lg.forward[e] = it->second.second ? min_dart : PlaneGraph::twin(min_dart);
    }
    if (plan.action == SurgeryPlan::Action::InsertArc) {
        int na = old_to_new[plan.a], nb = old_to_new[plan.b];
        int d = out.dart_between(na, nb);
        int e = PlaneGraph::edge_of(d);
        res.lg.forward[e] = d;
        res.lg.sigma[e] = plan.arc_sign.k() == lg.k ? plan.arc_sign : Perm::identity(lg.k);
    }
    return res;
}

namespace {

// Lengths of simple a-b paths with at most max_len edges; early-exits once
// `stop_at` is observed.
bool has_short_path(const PlaneGraph& g, int a, int b, int max_len, std::vector<int>* witness,
                    const std::vector<char>* skip_edge = nullptr) {
    std::vector<char> on_path(g.num_vertices(), 0);
    std::vector<int> path{a};
    on_path[a] = 1;
    bool found = false;
    auto dfs = [&](auto&& self) -> void {
        if (found) return;
        int u = path.back();
        for (int d : g.rotation(u)) {
            if (skip_edge && (*skip_edge)[PlaneGraph::edge_of(d)]) continue;
            int w = g.head(d);
            if (w == b) {
                if (static_cast<int>(path.size()) <= max_len) {
                    found = true;
                    if (witness) {
                        *witness = path;
                        witness->push_back(b);
                    }
                    return;
                }
                continue;
            }
            if (on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            on_path[w] = 0;
            if (found) return;
        }
    };
    dfs(dfs);
    return found;
}

} // namespace

SafetyReport check_safety(const LabelledGraph& lg, const SurgeryPlan& plan) {
    const PlaneGraph& g = lg.g();
    Cycle u = boundary_cycle(g);

    SafetyReport rep{true, true, {}, {}, apply_plan(lg, plan)};
    const PlaneGraph& out = rep.result.lg.g();
    const std::vector<int>& map = rep.result.old_to_new;

    // (a) the boundary must be untouched: no two U-vertices identified, and
    // no new edge between U-vertices.
    std::vector<char> on_u_new(out.num_vertices(), 0);
    for (int v : u.vertices()) on_u_new[map[v]] = 1;
    if (plan.action == SurgeryPlan::Action::Identify && u.contains(plan.a) && u.contains(plan.b))
        rep.condition_a = false;
    std::set<std::pair<int, int>> old_u_edges;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [x, y] = g.edge_endpoints(e);
        if (u.contains(x) && u.contains(y))
            old_u_edges.insert({std::min(map[x], map[y]), std::max(map[x], map[y])});
    }
    for (int e = 0; e < out.num_edges(); ++e) {
        auto [x, y] = out.edge_endpoints(e);
        if (on_u_new[x] && on_u_new[y] && !old_u_edges.count({std::min(x, y), std::max(x, y)}))
            rep.condition_a = false;
    }

    // (b) no 9^- cycle through the new or merged element.
    if (plan.action == SurgeryPlan::Action::InsertArc) {
        int na = map[plan.a], nb = map[plan.b];
        std::vector<char> skip(out.num_edges(), 0);
        skip[PlaneGraph::edge_of(out.dart_between(na, nb))] = 1;
        std::vector<int> witness;
        if (has_short_path(out, na, nb, 8, &witness, &skip)) {
            rep.condition_b = false;
            rep.created_short_cycle = witness;
        }
    } else if (plan.action == SurgeryPlan::Action::Identify) {
        // Cycles through the merged vertex using both fans correspond to
        // a-b paths of the same length in the post-deletion graph.
        LabelledGraph probe = lg;
        SurgeryPlan del_only{plan.deletions, SurgeryPlan::Action::None, -1, -1, Perm(), std::nullopt};
        ApplyResult mid = apply_plan(probe, del_only);
        int ma = mid.old_to_new[plan.a], mb = mid.old_to_new[plan.b];
        std::vector<int> witness;
        if (has_short_path(mid.lg.g(), ma, mb, 9, &witness)) {
            rep.condition_b = false;
            rep.created_short_cycle = witness;
        }
    }

    rep.result_class = classify(out);
    return rep;
}

SurgeryPlan parse_plan(std::istream& in, int k) {
    SurgeryPlan plan;
    plan.arc_sign = Perm::identity(k);
    std::string line;
    int lineno = 0;
    bool have_action = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "delete:") {
            int v;
            while (ls >> v) plan.deletions.push_back(v - 1);
        } else if (key == "identify:" || key == "insert:") {
            if (have_action) fail(ErrorKind::ParseError, "plan has two actions");
            have_action = true;
            int a, b;
            if (!(ls >> a >> b)) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected two vertices");
            plan.a = a - 1;
            plan.b = b - 1;
            plan.action = key == "identify:" ? SurgeryPlan::Action::Identify : SurgeryPlan::Action::InsertArc;
            std::string word;
            if (plan.action == SurgeryPlan::Action::InsertArc && (ls >> word))
                plan.arc_sign = Perm::from_word(word);
        } else if (key == "none") {
            have_action = true;
        } else if (key == "slot:") {
            int f;
            if (!(ls >> f)) fail(ErrorKind::ParseError, "slot needs a face index");
            plan.slot_face = f - 1;
        } else {
            fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return plan;
}

SurgeryPlan parse_plan_string(const std::string& text, int k) {
    std::istringstream in(text);
    return parse_plan(in, k);
}

SurgeryPlan load_plan(const std::string& path, int k) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    return parse_plan(in, k);
}

} // namespace dpc
