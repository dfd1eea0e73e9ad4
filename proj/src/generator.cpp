#include "dpc/generator.hpp"

#include <algorithm>
#include <random>

namespace dpc {

namespace {

// All lengths (edge counts) of simple u-w paths with at most max_len edges.
std::set<int> path_lengths(const PlaneGraph& g, int a, int b, int max_len) {
    std::set<int> lengths;
    std::vector<char> on_path(g.num_vertices(), 0);
    std::vector<int> path{a};
    on_path[a] = 1;
    auto dfs = [&](auto&& self) -> void {
        int u = path.back();
        for (int w : g.neighbors(u)) {
            if (w == b) {
                lengths.insert(static_cast<int>(path.size()));
                continue;
            }
            if (on_path[w] || static_cast<int>(path.size()) >= max_len) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    dfs(dfs);
    return lengths;
}

// Insert a path of `interior` new vertices between the corners at walk
// positions pa, pb of face f.
PlaneGraph split_face(const PlaneGraph& g, int f, int pa, int pb, int interior,
                      int outer_u, int outer_v) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> lists(n + interior);
    for (int v = 0; v < n; ++v) lists[v] = g.neighbors(v);

    int a = g.tail(g.face_darts(f)[pa]);
    int b = g.tail(g.face_darts(f)[pb]);
    int a_attach = interior == 0 ? b : n;
    int b_attach = interior == 0 ? a : n + interior - 1;

    auto insert_before_corner = [&](int v, int pos, int nb) {
        int d = g.face_darts(f)[pos];
        const auto& rot = g.rotation(v);
        int idx = -1;
        for (size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == d) idx = static_cast<int>(i);
        lists[v].insert(lists[v].begin() + idx, nb);
    };
    insert_before_corner(a, pa, a_attach);
    insert_before_corner(b, pb, b_attach);
    for (int i = 0; i < interior; ++i) {
        int left = i == 0 ? a : n + i - 1;
        int right = i == interior - 1 ? b : n + i + 1;
        lists[n + i] = {left, right};
    }
    return build(lists, outer_u, outer_v);
}

} // namespace

PlaneGraph generate(const GenConfig& cfg) {
    if (cfg.target_vertices < 2) fail(ErrorKind::OutOfDomain, "target_vertices must be at least 2");
    for (int l : cfg.forbidden_lengths)
        if (l < 3 || l > 13) fail(ErrorKind::OutOfDomain, "forbidden lengths must lie in 3..13");

    std::mt19937_64 rng(cfg.seed);
    auto pick = [&](int m) { return static_cast<int>(rng() % static_cast<std::uint64_t>(m)); };

    PlaneGraph g = build({{1}, {0}}, 0, 1);
    int max_forbidden = cfg.forbidden_lengths.empty() ? 0 : *cfg.forbidden_lengths.rbegin();

    int attempts = 0;
    int since_progress = 0;
    while (g.num_vertices() < cfg.target_vertices) {
        if (++attempts > cfg.max_attempts)
            fail(ErrorKind::AttemptsExhausted,
                 "no admissible split found after " + std::to_string(cfg.max_attempts) + " attempts");
        int dim = g.num_edges() - g.num_vertices() + 1;
        bool dim_capped = cfg.max_cyclomatic >= 0 && dim >= cfg.max_cyclomatic;
        // Growth can corner itself (every remaining split closes a forbidden
        // cycle). Restart from scratch with the same stream: deterministic.
        if (++since_progress > 500 || dim_capped) {
            g = build({{1}, {0}}, 0, 1);
            since_progress = 0;
            continue;
        }

        int f = pick(g.num_faces());
        int s = g.face_size(f);
        if (s < 2) continue;
        int pa = pick(s), pb = pick(s);
        int a = g.tail(g.face_darts(f)[pa]);
        int b = g.tail(g.face_darts(f)[pb]);
        if (a == b) continue;

        int path_edges = 1 + pick(std::max(1, cfg.max_path_edges));
        int interior = path_edges - 1;
        if (interior == 0 && g.adjacent(a, b)) continue; // chord would double an edge

        if (max_forbidden > 0) {
            bool bad = false;
            for (int p : path_lengths(g, a, b, max_forbidden - path_edges))
                if (cfg.forbidden_lengths.count(p + path_edges)) bad = true;
            if (bad) continue;
        }
        g = split_face(g, f, pa, pb, interior, 0, 1);
        since_progress = 0;
    }
    return g;
}

} // namespace dpc
