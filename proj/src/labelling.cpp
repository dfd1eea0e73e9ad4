#include "dpc/labelling.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace dpc {

namespace {

int canonical_forward(const PlaneGraph& g, int e) {
    return g.tail(2 * e) < g.head(2 * e) ? 2 * e : 2 * e + 1;
}

} // namespace

LabelledGraph all_identity(std::shared_ptr<const PlaneGraph> g, int k) {
    LabelledGraph lg;
    lg.k = k;
    lg.forward.resize(g->num_edges());
    lg.sigma.assign(g->num_edges(), Perm::identity(k));
    for (int e = 0; e < g->num_edges(); ++e) lg.forward[e] = canonical_forward(*g, e);
    lg.graph = std::move(g);
    return lg;
}

LabelledGraph all_identity(const PlaneGraph& g, int k) {
    return all_identity(std::make_shared<const PlaneGraph>(g), k);
}

LabelledGraph switch_vertex(const LabelledGraph& lg, int u, const Perm& s) {
    lg.g().check_vertex(u);
    if (s.k() != lg.k) fail(ErrorKind::WrongArity, "switch sign arity " + std::to_string(s.k()));
    LabelledGraph out = lg;
    for (int d : lg.g().rotation(u)) {
        int e = PlaneGraph::edge_of(d);
        if (lg.forward[e] == d)
            out.sigma[e] = lg.sigma[e].compose(s); // tail side
        else
            out.sigma[e] = s.inverse().compose(lg.sigma[e]); // head side
    }
    return out;
}

Perm monodromy(const LabelledGraph& lg, const Cycle& c, int basepoint) {
    const auto& vs = c.vertices();
    auto it = std::find(vs.begin(), vs.end(), basepoint);
    if (it == vs.end()) fail(ErrorKind::BasepointNotOnCycle, "vertex " + std::to_string(basepoint + 1));
    int start = static_cast<int>(it - vs.begin());
    int n = c.length();
    Perm m = Perm::identity(lg.k);
    for (int i = 0; i < n; ++i) {
        int a = vs[(start + i) % n], b = vs[(start + i + 1) % n];
        m = lg.along(lg.g().dart_between(a, b)).compose(m);
    }
    return m;
}

bool is_positive(const LabelledGraph& lg, const Cycle& c) {
    return monodromy(lg, c, c.vertices()[0]).is_identity();
}

NormalizeResult normalize(const LabelledGraph& lg) {
    const PlaneGraph& g = lg.g();
    if (!g.is_connected()) fail(ErrorKind::Disconnected, "normalize needs a connected graph");
    NormalizeResult res{lg, {}};
    std::vector<char> seen(g.num_vertices(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : g.rotation(v)) {
            int w = g.head(d);
            if (seen[w]) continue;
            seen[w] = 1;
            Perm rho = res.lg.along(d); // v -> w, w unvisited
            if (!rho.is_identity()) {
                res.lg = switch_vertex(res.lg, w, rho);
                res.switches.push_back({w, rho});
            }
            q.push(w);
        }
    }
    return res;
}

SignatureClasses::SignatureClasses(std::shared_ptr<const PlaneGraph> g, int k) : g_(std::move(g)), k_(k) {
    if (k < 2 || k > 4) fail(ErrorKind::BadK, "signature sweep supports k in 2..4");
    if (!g_->is_connected()) fail(ErrorKind::Disconnected, "signature classes need a connected graph");
    std::vector<char> seen(g_->num_vertices(), 0);
    std::vector<char> tree(g_->num_edges(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : g_->rotation(v)) {
            int w = g_->head(d);
            if (seen[w]) continue;
            seen[w] = 1;
            tree[PlaneGraph::edge_of(d)] = 1;
            q.push(w);
        }
    }
    for (int e = 0; e < g_->num_edges(); ++e)
        if (!tree[e]) free_edges_.push_back(e);
    std::uint64_t base = static_cast<std::uint64_t>(Perm::factorial(k_));
    for (size_t i = 0; i < free_edges_.size(); ++i) {
        if (count_ > UINT64_MAX / base)
            fail(ErrorKind::OutOfDomain, "signature class count overflows 64 bits");
        count_ *= base;
    }
}

LabelledGraph SignatureClasses::labelling(std::uint64_t index) const {
    if (index >= count_) fail(ErrorKind::OutOfDomain, "signature class index out of range");
    LabelledGraph lg = all_identity(g_, k_);
    std::uint64_t base = static_cast<std::uint64_t>(Perm::factorial(k_));
    for (int e : free_edges_) {
        lg.sigma[e] = Perm::unrank(k_, static_cast<int>(index % base));
        index /= base;
    }
    return lg;
}

LabelledGraph parse_sig(std::istream& in, std::shared_ptr<const PlaneGraph> g, int default_k) {
    struct Entry {
        int u, v;
        std::string word;
    };
    std::vector<Entry> entries;
    std::string line;
    int lineno = 0;
    int k = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        Entry e;
        if (!(ls >> e.u)) continue;
        if (!(ls >> e.v >> e.word))
            fail(ErrorKind::ParseError, "sig line " + std::to_string(lineno) + ": expected 'u v WORD'");
        if (k == 0)
            k = static_cast<int>(e.word.size());
        else if (k != static_cast<int>(e.word.size()))
            fail(ErrorKind::ParseError, "sig line " + std::to_string(lineno) + ": inconsistent arity");
        entries.push_back(e);
    }
    if (k == 0) k = default_k;

    LabelledGraph lg = all_identity(g, k);
    std::vector<char> listed(g->num_edges(), 0);
    for (const Entry& e : entries) {
        if (e.u < 1 || e.u > g->num_vertices() || e.v < 1 || e.v > g->num_vertices())
            fail(ErrorKind::UnknownVertex, "sig arc " + std::to_string(e.u) + "->" + std::to_string(e.v));
        int d = g->dart_between(e.u - 1, e.v - 1);
        if (d < 0)
            fail(ErrorKind::ParseError,
                 "sig arc " + std::to_string(e.u) + "->" + std::to_string(e.v) + " is not an edge");
        int eid = PlaneGraph::edge_of(d);
        if (listed[eid]) fail(ErrorKind::ParseError, "edge listed twice in signature");
        listed[eid] = 1;
        lg.forward[eid] = d;
        lg.sigma[eid] = Perm::from_word(e.word);
    }
    return lg;
}

LabelledGraph parse_sig_string(const std::string& text, std::shared_ptr<const PlaneGraph> g, int default_k) {
    std::istringstream in(text);
    return parse_sig(in, std::move(g), default_k);
}

LabelledGraph load_sig(const std::string& path, std::shared_ptr<const PlaneGraph> g, int default_k) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    return parse_sig(in, std::move(g), default_k);
}

std::string to_sig(const LabelledGraph& lg) {
    std::ostringstream out;
    for (int e = 0; e < lg.g().num_edges(); ++e) {
        if (lg.sigma[e].is_identity()) continue;
        int d = lg.forward[e];
        out << lg.g().tail(d) + 1 << " " << lg.g().head(d) + 1 << " " << lg.sigma[e].word() << "\n";
    }
    return out.str();
}

} // namespace dpc
