#include "dpc/cycles.hpp"

#include <algorithm>
#include <numeric>

namespace dpc {

namespace {

std::vector<int> canonical_cycle(std::vector<int> v) {
    // Least rotation of the lexicographically smaller orientation.
    auto least_rotation = [](const std::vector<int>& s) {
        int n = static_cast<int>(s.size());
        int best = 0;
        for (int i = 1; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                int a = s[(i + j) % n], b = s[(best + j) % n];
                if (a != b) {
                    if (a < b) best = i;
                    break;
                }
            }
        }
        std::vector<int> out(n);
        for (int j = 0; j < n; ++j) out[j] = s[(best + j) % n];
        return out;
    };
    std::vector<int> fwd = least_rotation(v);
    std::reverse(v.begin(), v.end());
    std::vector<int> rev = least_rotation(v);
    return fwd <= rev ? fwd : rev;
}

} // namespace

Cycle::Cycle(const PlaneGraph& g, std::vector<int> verts) {
    int n = static_cast<int>(verts.size());
    if (n < 3) fail(ErrorKind::NotACycle, "cycle needs at least 3 vertices");
    std::vector<char> seen(g.num_vertices(), 0);
    for (int v : verts) {
        g.check_vertex(v);
        if (seen[v]) fail(ErrorKind::NotACycle, "repeated vertex " + std::to_string(v + 1));
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!g.adjacent(verts[i], verts[(i + 1) % n]))
            fail(ErrorKind::NotACycle, "vertices " + std::to_string(verts[i] + 1) + " and " +
                                           std::to_string(verts[(i + 1) % n] + 1) + " are not adjacent");
    verts_ = canonical_cycle(std::move(verts));
}

bool Cycle::contains(int v) const {
    return std::find(verts_.begin(), verts_.end(), v) != verts_.end();
}

std::vector<int> Cycle::edge_ids(const PlaneGraph& g) const {
    std::vector<int> es;
    int n = length();
    for (int i = 0; i < n; ++i)
        es.push_back(PlaneGraph::edge_of(g.dart_between(verts_[i], verts_[(i + 1) % n])));
    return es;
}

std::vector<Cycle> enumerate_cycles(const PlaneGraph& g, int max_len) {
    if (max_len < 3) fail(ErrorKind::OutOfDomain, "max_len must be >= 3");
    std::vector<Cycle> out;
    int n = g.num_vertices();
    std::vector<char> on_path(n, 0);
    std::vector<int> path;

    // Paths start at the least vertex of the cycle; all later vertices are
    // larger, and orientation is fixed by path[1] < path.back().
    auto dfs = [&](auto&& self, int s) -> void {
        int u = path.back();
        for (int w : g.neighbors(u)) {
            if (w == s) {
                if (path.size() >= 3 && path[1] < u) out.emplace_back(g, path);
                continue;
            }
            if (w < s || on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, s);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path.assign(n, 0);
        on_path[s] = 1;
        dfs(dfs, s);
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices() < b.vertices();
    });
    return out;
}

SidePartition side_partition(const PlaneGraph& g, const Cycle& c) {
    std::vector<char> on_cycle_edge(g.num_edges(), 0);
    for (int e : c.edge_ids(g)) on_cycle_edge[e] = 1;
    std::vector<char> on_cycle_vertex(g.num_vertices(), 0);
    for (int v : c.vertices()) on_cycle_vertex[v] = 1;

    // Union faces across every edge not on C. C is a minimal cut of the dual,
    // so exactly two groups remain.
    std::vector<int> parent(g.num_faces());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        if (on_cycle_edge[e]) continue;
        int a = find(g.face_of(2 * e)), b = find(g.face_of(2 * e + 1));
        if (a != b) parent[a] = b;
    }
    int outer_root = find(g.outer_face());

    SidePartition part;
    part.face_interior.assign(g.num_faces(), 0);
    for (int f = 0; f < g.num_faces(); ++f) part.face_interior[f] = find(f) != outer_root;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (on_cycle_vertex[v]) continue;
        int side = part.face_interior[g.face_of(g.rotation(v)[0])];
        (side ? part.interior : part.exterior).push_back(v);
    }
    return part;
}

bool is_separating(const PlaneGraph& g, const Cycle& c) {
    SidePartition p = side_partition(g, c);
    return !p.interior.empty() && !p.exterior.empty();
}

std::vector<int> interior(const PlaneGraph& g, const Cycle& c) { return side_partition(g, c).interior; }
std::vector<int> exterior(const PlaneGraph& g, const Cycle& c) { return side_partition(g, c).exterior; }

std::vector<std::pair<int, int>> chords(const PlaneGraph& g, const Cycle& c) {
    const auto& vs = c.vertices();
    int n = c.length();
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < n; ++i) pos[vs[i]] = i;
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int w : g.neighbors(vs[i])) {
            int j = pos[w];
            if (j < 0 || j <= i) continue;
            if (j == (i + 1) % n || i == (j + 1) % n) continue;
            if (i == 0 && j == n - 1) continue;
            out.emplace_back(vs[i], w);
        }
    return out;
}

std::vector<SplitReport> splitting_paths(const PlaneGraph& g, const Cycle& c, int max_len, int min_len) {
    const auto& vs = c.vertices();
    int n = c.length();
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < n; ++i) pos[vs[i]] = i;

    std::vector<SplitReport> out;
    auto emit = [&](const std::vector<int>& path) {
        int a = pos[path.front()], b = pos[path.back()];
        int p = static_cast<int>(path.size()) - 1;
        // Arc from b forward to a, and from a forward to b (cyclic order of C).
        int arc_ab = (b - a + n) % n; // a -> b along C orientation
        int arc_ba = n - arc_ab;
        SplitReport r;
        r.path = path;
        r.cycle_a = path;
        for (int i = 1; i < arc_ba; ++i) r.cycle_a.push_back(vs[(b + i) % n]);
        r.cycle_b = path;
        for (int i = 1; i < arc_ab; ++i) r.cycle_b.push_back(vs[(a + arc_ab - i) % n]);
        r.lengths = {p + arc_ba, p + arc_ab};
        out.push_back(std::move(r));
    };

    std::vector<char> on_cycle(g.num_vertices(), 0), on_path(g.num_vertices(), 0);
    for (int v : vs) on_cycle[v] = 1;
    std::vector<int> path;
    auto dfs = [&](auto&& self) -> void {
        int u = path.back();
        for (int w : g.neighbors(u)) {
            int p = static_cast<int>(path.size()); // edge count if we step to w
            if (on_cycle[w]) {
                // Endpoint reached; dedupe the two directions by endpoint
                // order. A length-1 path must be a chord, not a cycle edge.
                bool consecutive = (pos[w] - pos[path.front()] + n) % n == 1 ||
                                   (pos[path.front()] - pos[w] + n) % n == 1;
                if (w != path.front() && p >= min_len && p <= max_len && path.front() < w &&
                    !(p == 1 && consecutive)) {
                    path.push_back(w);
                    emit(path);
                    path.pop_back();
                }
                continue;
            }
            if (on_path[w] || p >= max_len) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    for (int v : vs) {
        path.assign(1, v);
        std::fill(on_path.begin(), on_path.end(), 0);
        dfs(dfs);
    }
    std::sort(out.begin(), out.end(),
              [](const SplitReport& a, const SplitReport& b) { return a.path < b.path; });
    return out;
}

SplittingLemmaReport check_splitting_lemma(const PlaneGraph& g, const Cycle& u) {
    SplittingLemmaReport rep;
    for (SplitReport& s : splitting_paths(g, u, 5, 2)) {
        int p = s.path_length();
        auto in_range = [&](int len) { return len >= p + 1 && len <= 2 * p - 1; };
        SplittingLemmaInstance inst;
        inst.satisfied = in_range(s.lengths.first) || in_range(s.lengths.second);
        inst.split = std::move(s);
        rep.all_satisfied = rep.all_satisfied && inst.satisfied;
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

} // namespace dpc
