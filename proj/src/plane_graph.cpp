#include "dpc/plane_graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "dpc/cycles.hpp"

namespace dpc {

void PlaneGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v + 1));
}

int PlaneGraph::rot_next(int d) const {
    const auto& r = rot_[dart_tail_[d]];
    int i = rot_pos_[d];
    return r[(i + 1) % r.size()];
}

int PlaneGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(rot_[v].size());
}

std::vector<int> PlaneGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(rot_[v].size());
    for (int d : rot_[v]) out.push_back(head(d));
    return out;
}

int PlaneGraph::dart_between(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    for (int d : rot_[u])
        if (head(d) == v) return d;
    return -1;
}

std::vector<int> PlaneGraph::face_vertices(int f) const {
    std::vector<int> vs;
    vs.reserve(faces_[f].size());
    for (int d : faces_[f]) vs.push_back(tail(d));
    return vs;
}

std::vector<int> PlaneGraph::face_sizes_at(int v) const {
    check_vertex(v);
    std::vector<int> sizes;
    for (int d : rot_[v]) sizes.push_back(face_size(face_of_[d]));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool PlaneGraph::is_two_connected() const {
    if (!connected_ || n_ < 3) return false;
    // Remove each vertex in turn and test connectivity of the rest.
    for (int cut = 0; cut < n_; ++cut) {
        int start = cut == 0 ? 1 : 0;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : rot_[v]) {
                int w = head(d);
                if (w == cut || seen[w]) continue;
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
        if (count != n_ - 1) return false;
    }
    return true;
}

PlaneGraph build(const std::vector<std::vector<int>>& neighbor_lists,
                 int outer_tail, int outer_head, bool require_connected) {
    PlaneGraph g;
    g.n_ = static_cast<int>(neighbor_lists.size());
    if (g.n_ < 2) fail(ErrorKind::InconsistentRotation, "need at least two vertices");

    std::map<std::pair<int, int>, int> dart_id; // (tail, head) -> dart
    for (int v = 0; v < g.n_; ++v) {
        std::vector<char> seen(g.n_, 0);
        for (int w : neighbor_lists[v]) {
            if (w < 0 || w >= g.n_)
                fail(ErrorKind::UnknownVertex, "neighbor " + std::to_string(w + 1) + " of " + std::to_string(v + 1));
            if (w == v) fail(ErrorKind::LoopOrMultiEdge, "loop at vertex " + std::to_string(v + 1));
            if (seen[w])
                fail(ErrorKind::LoopOrMultiEdge,
                     "duplicate edge " + std::to_string(v + 1) + "-" + std::to_string(w + 1));
            seen[w] = 1;
        }
    }
    // Allocate dart pairs on first sight of each unordered pair.
    for (int v = 0; v < g.n_; ++v) {
        for (int w : neighbor_lists[v]) {
            if (dart_id.count({v, w})) continue;
            int d = static_cast<int>(g.dart_tail_.size());
            g.dart_tail_.push_back(v);
            g.dart_tail_.push_back(w);
            dart_id[{v, w}] = d;
            dart_id[{w, v}] = d + 1;
        }
    }
    // Twin consistency: every (v,w) must appear in w's list too.
    for (auto& [key, d] : dart_id) {
        auto [v, w] = key;
        if (std::find(neighbor_lists[v].begin(), neighbor_lists[v].end(), w) == neighbor_lists[v].end())
            fail(ErrorKind::InconsistentRotation,
                 "edge " + std::to_string(w + 1) + "-" + std::to_string(v + 1) + " missing from rotation of " +
                     std::to_string(v + 1));
        (void)d;
    }

    g.rot_.assign(g.n_, {});
    g.rot_pos_.assign(g.dart_tail_.size(), -1);
    for (int v = 0; v < g.n_; ++v) {
        for (int w : neighbor_lists[v]) {
            int d = dart_id[{v, w}];
            g.rot_pos_[d] = static_cast<int>(g.rot_[v].size());
            g.rot_[v].push_back(d);
        }
    }

    // Connectivity.
    {
        std::vector<char> seen(g.n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : g.rot_[v]) {
                int w = g.head(d);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        g.connected_ = count == g.n_;
        if (require_connected && !g.connected_)
            fail(ErrorKind::DisconnectedWhenRequired, "graph is not connected");
    }

    // Face walks.
    g.face_of_.assign(g.dart_tail_.size(), -1);
    for (int d0 = 0; d0 < static_cast<int>(g.dart_tail_.size()); ++d0) {
        if (g.face_of_[d0] >= 0) continue;
        int f = static_cast<int>(g.faces_.size());
        g.faces_.emplace_back();
        int d = d0;
        do {
            g.face_of_[d] = f;
            g.faces_[f].push_back(d);
            d = g.face_next(d);
        } while (d != d0);
    }

    auto it = dart_id.find({outer_tail, outer_head});
    if (it == dart_id.end())
        fail(ErrorKind::UnknownVertex,
             "outer dart " + std::to_string(outer_tail + 1) + "->" + std::to_string(outer_head + 1) +
                 " is not an edge");
    g.outer_dart_ = it->second;
    g.f0_ = g.face_of_[g.outer_dart_];

    g.external_.assign(g.n_, 0);
    for (int d : g.faces_[g.f0_]) g.external_[g.tail(d)] = 1;

    return g;
}

PlaneGraph with_outer(const PlaneGraph& g, int u, int v) {
    std::vector<std::vector<int>> lists(g.num_vertices());
    for (int x = 0; x < g.num_vertices(); ++x) lists[x] = g.neighbors(x);
    return build(lists, u, v, false);
}

PlaneGraph parse_pg(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::vector<int>> lists;
    std::vector<char> have;
    int outer_u = -1, outer_v = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        auto want_int = [&](const std::string& what) {
            long long x;
            if (!(ls >> x)) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected " + what);
            return x;
        };
        if (key == "vertices:") {
            n = static_cast<int>(want_int("vertex count"));
            if (n < 1) fail(ErrorKind::ParseError, "bad vertex count");
            lists.assign(n, {});
            have.assign(n, 0);
        } else if (key == "outer:") {
            outer_u = static_cast<int>(want_int("outer tail")) - 1;
            outer_v = static_cast<int>(want_int("outer head")) - 1;
        } else {
            if (n < 0) fail(ErrorKind::ParseError, "vertex line before 'vertices:' header");
            if (key.empty() || key.back() != ':')
                fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected 'i:'");
            int v = 0;
            try {
                v = std::stoi(key.substr(0, key.size() - 1));
            } catch (...) {
                fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad vertex id '" + key + "'");
            }
            if (v < 1 || v > n) fail(ErrorKind::ParseError, "vertex id " + std::to_string(v) + " out of range");
            if (have[v - 1]) fail(ErrorKind::ParseError, "duplicate line for vertex " + std::to_string(v));
            have[v - 1] = 1;
            long long w;
            while (ls >> w) {
                if (w < 1 || w > n)
                    fail(ErrorKind::ParseError, "neighbor " + std::to_string(w) + " out of range");
                lists[v - 1].push_back(static_cast<int>(w) - 1);
            }
        }
    }
    if (n < 0) fail(ErrorKind::ParseError, "missing 'vertices:' header");
    if (outer_u < 0) fail(ErrorKind::ParseError, "missing 'outer:' line");
    for (int v = 0; v < n; ++v)
        if (!have[v]) fail(ErrorKind::ParseError, "missing rotation line for vertex " + std::to_string(v + 1));
    return build(lists, outer_u, outer_v);
}

PlaneGraph parse_pg_string(const std::string& text) {
    std::istringstream in(text);
    return parse_pg(in);
}

PlaneGraph load_pg(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    return parse_pg(in);
}

std::string to_pg(const PlaneGraph& g) {
    std::ostringstream out;
    out << "vertices: " << g.num_vertices() << "\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << v + 1 << ":";
        for (int d : g.rotation(v)) out << " " << g.head(d) + 1;
        out << "\n";
    }
    int od = g.outer_dart();
    out << "outer: " << g.tail(od) + 1 << " " << g.head(od) + 1 << "\n";
    return out.str();
}

GraphClassReport classify(const PlaneGraph& g) {
    GraphClassReport r;
    r.is_simple = true; // enforced by build()
    r.is_connected = g.is_connected();
    r.is_two_connected = g.is_two_connected();
    for (const Cycle& c : enumerate_cycles(g, 9)) {
        int len = c.length();
        if (len == 4 || len == 7 || len == 9) r.forbidden_cycles_found.push_back(c.vertices());
    }
    r.in_class_g = r.is_simple && r.is_connected && r.forbidden_cycles_found.empty();
    return r;
}

} // namespace dpc
