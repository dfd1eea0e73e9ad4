#include "dpc/discharging.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dpc {

std::string charge_str(const Charge& c) {
    std::ostringstream out;
    out << c.numerator() << "/" << c.denominator();
    return out.str();
}

Charge ChargeLedger::total_initial() const {
    Charge t(0);
    for (const Charge& c : vertex_initial) t += c;
    for (const Charge& c : face_initial) t += c;
    return t;
}

Charge ChargeLedger::total_final() const {
    Charge t(0);
    for (const Charge& c : vertex_final) t += c;
    for (const Charge& c : face_final) t += c;
    return t;
}

ChargeLedger initial_charges(const PlaneGraph& g) {
    ChargeLedger led;
    led.vertex_initial.reserve(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) led.vertex_initial.emplace_back(g.degree(v) - 4);
    for (int f = 0; f < g.num_faces(); ++f)
        led.face_initial.emplace_back(f == g.outer_face() ? g.face_size(f) + 4 : g.face_size(f) - 4);
    led.vertex_final = led.vertex_initial;
    led.face_final = led.face_initial;
    led.counters.assign(g.num_vertices(), {});
    return led;
}

namespace {

struct DischargeContext {
    const PlaneGraph* g;
    std::vector<char> special_face;
    std::vector<SpecialSubgraph> specials;
    std::vector<int> h;
    std::vector<char> bad;          // bad vertices
    std::vector<char> internal3;    // internal 3-vertices
    std::vector<StringFinding> strings;
};

DischargeContext make_context(const LabelledGraph& lg) {
    const PlaneGraph& g = lg.g();
    DischargeContext ctx;
    ctx.g = &g;
    ctx.specials = special_subgraphs(g);
    ctx.special_face.assign(g.num_faces(), 0);
    for (const SpecialSubgraph& s : ctx.specials) {
        ctx.special_face[s.face3] = 1;
        ctx.special_face[s.face5] = 1;
    }
    ctx.h = h_counts(g);
    ctx.bad = bad_vertex_flags(lg);
    ctx.internal3.assign(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) ctx.internal3[v] = !g.is_external(v) && g.degree(v) == 3;
    ctx.strings = all_strings(g);
    return ctx;
}

// R8 amount a string vertex receives from one anchored end across face f.
std::optional<Charge> string_rate(const DischargeContext& ctx, int f) {
    const PlaneGraph& g = *ctx.g;
    if (f == g.outer_face()) return std::nullopt;
    int k = g.face_size(f);
    if (k == 5 && !ctx.special_face[f]) return Charge(5, 52);
    if (k >= 6 && k <= 12) return Charge(2, k) - Charge(2, 13);
    return std::nullopt;
}

} // namespace

ChargeLedger discharge(const LabelledGraph& lg) {
    const PlaneGraph& g = lg.g();
    if (!classify(g).in_class_g) fail(ErrorKind::NotInClassG, "discharging needs a member of the class");

    DischargeContext ctx = make_context(lg);
    ChargeLedger led = initial_charges(g);
    int f0 = g.outer_face();

    auto move = [&](int rule, Element from, Element to, Charge amount) {
        led.transfers.push_back({rule, from, to, amount});
        auto& src = from.kind == Element::Kind::Vertex ? led.vertex_final[from.id] : led.face_final[from.id];
        auto& dst = to.kind == Element::Kind::Vertex ? led.vertex_final[to.id] : led.face_final[to.id];
        src -= amount;
        dst += amount;
    };

    // R1: f0 pays 17/13 to each incident vertex, per walk occurrence.
    for (int d : g.face_darts(f0)) move(1, Element::face(f0), Element::vertex(g.tail(d)), Charge(17, 13));

    // R2: non-special 3-faces collect 1/3 from each incident vertex.
    for (int f = 0; f < g.num_faces(); ++f) {
        if (f == f0 || g.face_size(f) != 3 || ctx.special_face[f]) continue;
        for (int d : g.face_darts(f)) move(2, Element::vertex(g.tail(d)), Element::face(f), Charge(1, 3));
    }

    // R3: within a non-special 3-face, non-(internal 3-vertices) pay 2/15 to
    // internal 3-vertices.
    for (int f = 0; f < g.num_faces(); ++f) {
        if (f == f0 || g.face_size(f) != 3 || ctx.special_face[f]) continue;
        std::vector<int> tri = g.face_vertices(f);
        for (int u : tri) {
            if (!ctx.internal3[u]) continue;
            for (int v : tri)
                if (v != u && !ctx.internal3[v]) move(3, Element::vertex(v), Element::vertex(u), Charge(2, 15));
        }
    }

    // R4: each special 5-face pays 1 to each adjacent 3-face.
    for (const SpecialSubgraph& s : ctx.specials) move(4, Element::face(s.face5), Element::face(s.face3), Charge(1));

    // R5: non-special 5-faces pay 1/4 to internal 3-vertices, 1/2 to 2-vertices.
    for (int f = 0; f < g.num_faces(); ++f) {
        if (f == f0 || g.face_size(f) != 5 || ctx.special_face[f]) continue;
        for (int d : g.face_darts(f)) {
            int v = g.tail(d);
            if (ctx.internal3[v]) move(5, Element::face(f), Element::vertex(v), Charge(1, 4));
            else if (g.degree(v) == 2) move(5, Element::face(f), Element::vertex(v), Charge(1, 2));
        }
    }

    // R6: bounded 6+ faces pay (d(f)-4)/d(f) to each incident vertex.
    for (int f = 0; f < g.num_faces(); ++f) {
        if (f == f0 || g.face_size(f) < 6) continue;
        Charge amount(g.face_size(f) - 4, g.face_size(f));
        for (int d : g.face_darts(f)) move(6, Element::face(f), Element::vertex(g.tail(d)), amount);
    }

    // R7: non-bad vertices pay 2/15 to each adjacent bad vertex.
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, w] = g.edge_endpoints(e);
        if (!ctx.bad[u] && ctx.bad[w]) move(7, Element::vertex(u), Element::vertex(w), Charge(2, 15));
        if (ctx.bad[u] && !ctx.bad[w]) move(7, Element::vertex(w), Element::vertex(u), Charge(2, 15));
    }

    // R8: anchors pay each vertex of their string, once per anchored end and
    // per qualifying face carrying the string.
    for (const StringFinding& s : ctx.strings) {
        for (int f : s.faces) {
            std::optional<Charge> rate = string_rate(ctx, f);
            if (!rate) continue;
            for (int anchor : s.anchors)
                for (int x : s.path) move(8, Element::vertex(anchor), Element::vertex(x), *rate);
        }
    }

    // Counters for the claim audits.
    for (int v = 0; v < g.num_vertices(); ++v) {
        VertexCounters& c = led.counters[v];
        for (int d : g.rotation(v)) {
            int f = g.face_of(d);
            if (f == f0) continue;
            int size = g.face_size(f);
            if (size == 3 && !ctx.special_face[f]) ++c.r1;
            if (size == 8) ++c.r2;
            if (size >= 10) ++c.r3;
        }
        for (int w : g.neighbors(v))
            if (ctx.bad[w]) ++c.b;
        c.h = ctx.h[v];
        // t: distinct qualifying faces at v sharing an edge with f0
        std::set<int> tf;
        for (int d : g.rotation(v)) {
            int f = g.face_of(d);
            if (f == f0) continue;
            int size = g.face_size(f);
            bool qualifies = (size == 5 && !ctx.special_face[f]) || size >= 6;
            if (!qualifies) continue;
            bool touches_f0 = false;
            for (int fd : g.face_darts(f))
                if (g.face_of(PlaneGraph::twin(fd)) == f0) touches_f0 = true;
            if (touches_f0) tf.insert(f);
        }
        c.t = static_cast<int>(tf.size());
    }

    return led;
}

ChargeLedger replay(const PlaneGraph& g, const ChargeLedger& led) {
    ChargeLedger out = initial_charges(g);
    out.transfers = led.transfers;
    out.counters = led.counters;
    for (const Transfer& t : led.transfers) {
        auto& src = t.from.kind == Element::Kind::Vertex ? out.vertex_final[t.from.id] : out.face_final[t.from.id];
        auto& dst = t.to.kind == Element::Kind::Vertex ? out.vertex_final[t.to.id] : out.face_final[t.to.id];
        src -= t.amount;
        dst += t.amount;
    }
    return out;
}

Charge g_bound(int k) {
    if (k == 6 || k == 8 || k == 10 || k == 12) return Charge(k - 4, 13);
    if (k == 11) return Charge(7, 13) - (Charge(1, 11) - Charge(1, 13));
    if (k >= 13) return Charge(k - 4, k);
    fail(ErrorKind::OutOfDomain, "g(k) undefined for k = " + std::to_string(k));
}

std::vector<SpecialCharge> special_charges(const PlaneGraph& g, const ChargeLedger& led) {
    std::vector<int> h = h_counts(g);
    std::vector<SpecialCharge> out;
    for (const SpecialSubgraph& s : special_subgraphs(g)) {
        SpecialCharge sc;
        sc.subgraph = s;
        sc.ch = Charge(0);
        sc.ch_star = Charge(0);
        for (int v : s.v) {
            sc.ch += led.vertex_initial[v] / Charge(h[v]);
            sc.ch_star += led.vertex_final[v] / Charge(h[v]);
        }
        out.push_back(sc);
    }
    return out;
}

std::vector<ClaimCheck> ClaimReport::violations() const {
    std::vector<ClaimCheck> out;
    for (const ClaimCheck& c : checks)
        if (!c.holds) out.push_back(c);
    return out;
}

ClaimReport audit_claims(const LabelledGraph& lg, const ChargeLedger& led) {
    const PlaneGraph& g = lg.g();
    if (led.vertex_final.size() != static_cast<size_t>(g.num_vertices()) ||
        led.face_final.size() != static_cast<size_t>(g.num_faces()))
        fail(ErrorKind::LedgerMissing, "ledger does not match the graph");

    DischargeContext ctx = make_context(lg);
    int f0 = g.outer_face();
    ClaimReport rep;

    auto add = [&](ClaimCheck c) {
        rep.all_hold = rep.all_hold && c.holds;
        rep.checks.push_back(std::move(c));
    };

    // Claim 1: string totals per (string, face, anchor).
    for (const StringFinding& s : ctx.strings) {
        for (int f : s.faces) {
            if (f == f0) continue;
            int k = g.face_size(f);
            if (k < 5) continue;
            std::optional<Charge> rate = string_rate(ctx, f);
            std::map<int, int> ends_per_anchor;
            for (int a : s.anchors) ++ends_per_anchor[a];
            for (auto [u, ends] : ends_per_anchor) {
                Charge total = rate ? *rate * Charge(ends) * Charge(s.length()) : Charge(0);
                ClaimCheck c;
                c.claim = "claim1_cap";
                c.subject = "anchor v" + std::to_string(u + 1) + ", face f" + std::to_string(f + 1);
                c.lhs = total;
                c.rhs = Charge(7, 26);
                c.holds = total <= c.rhs;
                c.depends_on = {"string_lemma"};
                add(std::move(c));
                if (k >= 6 && k != 7 && k != 9) {
                    Charge from_face(0);
                    for (int d : g.face_darts(f))
                        if (g.tail(d) == u) from_face += Charge(k - 4, k);
                    ClaimCheck m;
                    m.claim = "claim1_margin";
                    m.subject = "anchor v" + std::to_string(u + 1) + ", face f" + std::to_string(f + 1);
                    m.lhs = from_face - total;
                    m.rhs = g_bound(k);
                    m.holds = m.lhs >= m.rhs;
                    m.depends_on = {"string_lemma"};
                    add(std::move(m));
                }
            }
        }
    }

    // Claim 2: 4+ vertices, with the counter inequalities from the proof.
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) < 4) continue;
        const VertexCounters& c = led.counters[v];
        bool external = g.is_external(v);
        if (!external) {
            add({"formula3a", "v" + std::to_string(v + 1), c.r1 + c.b <= c.r3, Charge(c.r1 + c.b), Charge(c.r3), {}});
            add({"formula3b", "v" + std::to_string(v + 1), c.r1 + c.b + c.h <= c.r2 + c.r3,
                 Charge(c.r1 + c.b + c.h), Charge(c.r2 + c.r3), {}});
            ClaimCheck k;
            k.claim = "claim2_internal";
            k.subject = "v" + std::to_string(v + 1);
            k.lhs = led.vertex_final[v];
            k.rhs = Charge(c.h, 2);
            k.holds = k.lhs >= k.rhs;
            k.depends_on = {"internal_min_degree_3", "string_lemma"};
            add(std::move(k));
        } else {
            add({"formula5", "v" + std::to_string(v + 1), c.r1 + c.h + c.b <= c.r2 + c.r3 + 1 - c.t,
                 Charge(c.r1 + c.h + c.b), Charge(c.r2 + c.r3 + 1 - c.t), {}});
            add({"formula6", "v" + std::to_string(v + 1), 2 * c.r1 + 2 * c.h <= g.degree(v),
                 Charge(2 * c.r1 + 2 * c.h), Charge(g.degree(v)), {}});
            ClaimCheck k;
            k.claim = "claim2_external";
            k.subject = "v" + std::to_string(v + 1);
            k.lhs = led.vertex_final[v];
            k.rhs = Charge(11 * c.h, 15);
            k.holds = k.lhs > k.rhs;
            k.depends_on = {"internal_min_degree_3", "string_lemma"};
            add(std::move(k));
        }
    }

    // Claim 3: special subgraphs.
    for (const SpecialCharge& sc : special_charges(g, led)) {
        bool has_external = false;
        for (int v : sc.subgraph.v)
            if (g.is_external(v)) has_external = true;
        ClaimCheck k;
        k.claim = has_external ? "claim3_external" : "claim3_internal";
        k.subject = "H(f" + std::to_string(sc.subgraph.face3 + 1) + ",f" + std::to_string(sc.subgraph.face5 + 1) + ")";
        k.lhs = sc.ch_star;
        k.rhs = Charge(0);
        k.holds = has_external ? k.lhs > k.rhs : k.lhs >= k.rhs;
        k.depends_on = {"splitting_lemma", "no_light_5face", "bad_vertex_outer_ok", "string_lemma",
                        "internal_min_degree_3"};
        add(std::move(k));
    }

    // Claims 4 and 5: vertices outside the special subgraphs.
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (ctx.h[v] > 0) continue;
        ClaimCheck k;
        k.subject = "v" + std::to_string(v + 1);
        k.lhs = led.vertex_final[v];
        k.rhs = Charge(0);
        if (g.degree(v) >= 3) {
            bool external = g.is_external(v);
            k.claim = external ? "claim4_external" : "claim4_internal";
            k.holds = external ? k.lhs > k.rhs : k.lhs >= k.rhs;
            k.depends_on = {"no_negative_light_3face", "bad_vertex_outer_ok", "string_lemma",
                            "internal_min_degree_3"};
        } else if (g.degree(v) == 2) {
            k.claim = "claim5";
            k.holds = k.lhs >= k.rhs;
            k.depends_on = {"internal_min_degree_3", "string_lemma"};
        } else {
            continue; // degree <= 1 is outside every claim
        }
        add(std::move(k));
    }

    // Claim 6: faces.
    for (int f = 0; f < g.num_faces(); ++f) {
        ClaimCheck k;
        k.claim = f == f0 ? "claim6_f0" : "claim6";
        k.subject = "f" + std::to_string(f + 1);
        k.lhs = led.face_final[f];
        k.rhs = Charge(0);
        k.holds = k.lhs >= k.rhs;
        k.depends_on = {"no_light_5face", "string_lemma"};
        add(std::move(k));
    }

    return rep;
}

MetaReport meta_audit(const LabelledGraph& lg, const std::optional<Coloring>& phi0) {
    const PlaneGraph& g = lg.g();
    if (!classify(g).in_class_g) fail(ErrorKind::PreconditionFailed, "graph is not in the class");
    Cycle u = boundary_cycle(g);
    if (!is_good_cycle(g, u)) fail(ErrorKind::PreconditionFailed, "boundary of f0 is not a good cycle");
    bool has_ext3 = false;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.is_external(v) && g.degree(v) >= 3) has_ext3 = true;
    if (!has_ext3) fail(ErrorKind::PreconditionFailed, "no external vertex of degree >= 3");
    if (phi0) {
        std::vector<char> on_boundary(g.num_vertices(), 0);
        for (int v : u.vertices()) on_boundary[v] = 1;
        for (int v : u.vertices())
            if (phi0->color(v) < 1 || phi0->color(v) > lg.k)
                fail(ErrorKind::PreconditionFailed, "boundary coloring is not total");
        for (int d = 0; d < g.num_darts(); ++d) {
            int x = g.tail(d), y = g.head(d);
            if (!on_boundary[x] || !on_boundary[y]) continue;
            if (lg.along(d).apply(phi0->color(x)) == phi0->color(y))
                fail(ErrorKind::PreconditionFailed, "boundary coloring is not proper");
        }
    }

    MetaReport rep;
    rep.predicates = lemma_predicates(lg);
    rep.failed_predicates = rep.predicates.failed();
    rep.contradiction_witnessed = !rep.failed_predicates.empty();
    rep.anomaly = rep.failed_predicates.empty();
    rep.claims = audit_claims(lg, discharge(lg));
    return rep;
}

std::string ledger_text(const PlaneGraph& g, const ChargeLedger& led) {
    std::ostringstream out;
    auto element_name = [&](Element e) {
        if (e.kind == Element::Kind::Vertex) return "v" + std::to_string(e.id + 1);
        std::string s = "f" + std::to_string(e.id + 1);
        if (e.id == g.outer_face()) s += "*";
        return s;
    };
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "vertex v" << v + 1 << " initial " << charge_str(led.vertex_initial[v]) << " final "
            << charge_str(led.vertex_final[v]) << "\n";
    }
    for (int f = 0; f < g.num_faces(); ++f) {
        out << "face f" << f + 1 << (f == g.outer_face() ? "*" : "") << " size " << g.face_size(f)
            << " initial " << charge_str(led.face_initial[f]) << " final " << charge_str(led.face_final[f])
            << "\n";
    }
    for (const Transfer& t : led.transfers) {
        out << "R" << t.rule << " " << element_name(t.from) << " -> " << element_name(t.to) << " "
            << charge_str(t.amount) << "\n";
    }
    out << "sum_initial: " << charge_str(led.total_initial()) << "\n";
    out << "sum_final: " << charge_str(led.total_final()) << "\n";
    return out.str();
}

} // namespace dpc
