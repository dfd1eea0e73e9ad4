#include "dpc/fixtures.hpp"

#include <map>
#include <numeric>

namespace dpc::fixtures {

PlaneGraph from_faces(int n, const std::vector<std::vector<int>>& faces, int outer) {
    std::map<std::pair<int, int>, std::pair<int, int>> next_out; // (b,a) -> (b,c)
    std::map<std::pair<int, int>, int> seen;
    for (const auto& walk : faces) {
        int s = static_cast<int>(walk.size());
        for (int i = 0; i < s; ++i) {
            int a = walk[i], b = walk[(i + 1) % s], c = walk[(i + 2) % s];
            if (++seen[{a, b}] > 1)
                fail(ErrorKind::InconsistentRotation,
                     "directed edge " + std::to_string(a + 1) + "->" + std::to_string(b + 1) + " listed twice");
            next_out[{b, a}] = {b, c};
        }
    }
    for (auto& [dart, cnt] : seen)
        if (!seen.count({dart.second, dart.first}))
            fail(ErrorKind::InconsistentRotation, "edge misses its reverse direction");

    std::vector<std::vector<int>> lists(n);
    std::vector<char> done(n, 0);
    for (auto& [dart, nxt] : next_out) {
        int v = dart.first;
        if (done[v]) continue;
        done[v] = 1;
        std::pair<int, int> start = dart, cur = dart;
        int guard = 0;
        do {
            lists[v].push_back(cur.second);
            auto it = next_out.find(cur);
            if (it == next_out.end()) fail(ErrorKind::InconsistentRotation, "broken rotation");
            cur = it->second;
            if (++guard > n * n + 10) fail(ErrorKind::InconsistentRotation, "rotation does not close");
        } while (cur != start);
    }
    PlaneGraph g = build(lists, faces[outer][0], faces[outer][1]);
    if (g.num_faces() != static_cast<int>(faces.size()))
        fail(ErrorKind::InconsistentRotation, "face walks are not a planar face set");
    return g;
}

namespace {

// path a -> b through consecutive ids first..last (inclusive, ascending)
void append_run(std::vector<int>& walk, int first, int last) {
    for (int v = first; v <= last; ++v) walk.push_back(v);
}
void append_run_rev(std::vector<int>& walk, int last, int first) {
    for (int v = last; v >= first; --v) walk.push_back(v);
}

} // namespace

PlaneGraph cycle(int n) {
    std::vector<int> fwd(n), bwd(n);
    std::iota(fwd.begin(), fwd.end(), 0);
    bwd[0] = 0;
    for (int i = 1; i < n; ++i) bwd[i] = n - i;
    return from_faces(n, {fwd, bwd}, 1);
}

PlaneGraph k3() { return cycle(3); }

PlaneGraph k4() {
    return from_faces(4, {{3, 0, 1}, {3, 1, 2}, {3, 2, 0}, {0, 2, 1}}, 3);
}

PlaneGraph w5() {
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 5; ++i) faces.push_back({5, i, (i + 1) % 5});
    faces.push_back({0, 4, 3, 2, 1});
    return from_faces(6, faces, 5);
}

PlaneGraph prism() {
    return from_faces(6,
                      {{3, 4, 5}, {0, 1, 4, 3}, {1, 2, 5, 4}, {2, 0, 3, 5}, {0, 2, 1}},
                      4);
}

PlaneGraph h_graph() {
    // v1..v6 = 0..5; triangle [v2,v1,v6], pentagon [v2..v6], chord v2v6
    return from_faces(6,
                      {{0, 1, 5},          // triangle v1 v2 v6
                       {1, 2, 3, 4, 5},    // pentagon v2 v3 v4 v5 v6
                       {0, 5, 4, 3, 2, 1}},
                      2);
}

PlaneGraph dodecahedron() {
    auto a = [](int i) { return i % 5; };
    auto b = [](int i) { return 5 + i % 5; };
    auto c = [](int i) { return 10 + i % 5; };
    auto d = [](int i) { return 15 + i % 5; };
    std::vector<std::vector<int>> faces;
    faces.push_back({a(0), a(1), a(2), a(3), a(4)});
    for (int i = 0; i < 5; ++i) faces.push_back({a(i + 1), a(i), b(i), c(i), b(i + 1)});
    for (int i = 0; i < 5; ++i) faces.push_back({d(i), d(i + 1), c(i + 1), b(i + 1), c(i)});
    faces.push_back({d(0), d(4), d(3), d(2), d(1)});
    return from_faces(20, faces, 11);
}

PlaneGraph claw_fixture(int n, int arc1, int arc2, int arc3) {
    if (arc1 + arc2 + arc3 != n) fail(ErrorKind::OutOfDomain, "arcs must sum to the cycle length");
    int m = n; // hub id
    int q0 = 0, q1 = arc1, q2 = arc1 + arc2;
    std::vector<std::vector<int>> faces;
    auto cell = [&](int from, int to) {
        std::vector<int> walk{m};
        for (int i = from; i != to; i = (i + 1) % n) walk.push_back(i);
        walk.push_back(to);
        return walk;
    };
    faces.push_back(cell(q0, q1));
    faces.push_back(cell(q1, q2));
    faces.push_back(cell(q2, q0));
    std::vector<int> outer{0};
    append_run_rev(outer, n - 1, 1);
    faces.push_back(outer);
    return from_faces(n + 1, faces, 3);
}

PlaneGraph biclaw_5558() {
    int u1 = 13, u2 = 14;
    std::vector<std::vector<int>> faces;
    faces.push_back({u1, 0, 1, 2, 3});          // 5-cell at u1
    faces.push_back({u1, 3, 4, 5, u2});         // bridge 5-cell
    faces.push_back({u2, 5, 6, 7, 8});          // 5-cell at u2
    faces.push_back({u2, 8, 9, 10, 11, 12, 0, u1}); // bridge 8-cell
    std::vector<int> outer{0};
    append_run_rev(outer, 12, 1);
    faces.push_back(outer);
    return from_faces(15, faces, 4);
}

PlaneGraph theta(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1 || (p == 1 && q == 1) || (q == 1 && r == 1) || (p == 1 && r == 1))
        fail(ErrorKind::OutOfDomain, "theta needs at most one trivial path");
    int A = 0, B = 1;
    int x0 = 2;           // p-1 interior vertices
    int y0 = x0 + (p - 1); // q-1
    int z0 = y0 + (q - 1); // r-1
    int n = z0 + (r - 1);
    auto path_fwd = [&](int base, int count, std::vector<int>& walk) {
        for (int i = 0; i < count; ++i) walk.push_back(base + i);
    };
    auto path_rev = [&](int base, int count, std::vector<int>& walk) {
        for (int i = count - 1; i >= 0; --i) walk.push_back(base + i);
    };
    std::vector<int> f_pq{A};
    path_fwd(x0, p - 1, f_pq);
    f_pq.push_back(B);
    path_rev(y0, q - 1, f_pq);
    std::vector<int> f_qr{A};
    path_fwd(y0, q - 1, f_qr);
    f_qr.push_back(B);
    path_rev(z0, r - 1, f_qr);
    std::vector<int> f_pr{B};
    path_rev(x0, p - 1, f_pr);
    f_pr.push_back(A);
    path_fwd(z0, r - 1, f_pr);
    return from_faces(n, {f_pq, f_qr, f_pr}, 2);
}

PlaneGraph pent_string() {
    return from_faces(7,
                      {{0, 1, 2, 3, 4},       // pentagon
                       {0, 5, 6, 2, 1},       // 5-face through the path, becomes f0
                       {0, 4, 3, 2, 6, 5}},   // 6-face
                      1);
}

PlaneGraph c10_chord() {
    std::vector<int> f1, f2, outer{0};
    append_run(f1, 0, 5);
    append_run(f2, 5, 9);
    f2.push_back(0);
    append_run_rev(outer, 9, 1);
    return from_faces(10, {f1, f2, outer}, 2);
}

PlaneGraph light5_web() {
    // p0..p4 = 0..4, s0..s4 = 5..9, ring interiors: A1..A4 = 10..13,
    // B1 = 14, C1..C4 = 15..18, D1 = 19, E1..E4 = 20..23, o0..o9 = 24..33.
    const int p0 = 0, s0 = 5, A1 = 10, B1 = 14, C1 = 15, D1 = 19, E1 = 20, o0 = 24;
    auto p = [&](int i) { return p0 + i % 5; };
    auto s = [&](int i) { return s0 + i % 5; };
    auto o = [&](int i) { return o0 + i % 10; };
    std::vector<std::vector<int>> faces;
    faces.push_back({p(0), p(1), p(2), p(3), p(4)}); // the light pentagon

    std::vector<int> L0{s(0)};
    append_run(L0, A1, A1 + 3);
    L0.insert(L0.end(), {s(1), p(1), p(0)});
    std::vector<int> L1{s(1), B1, s(2), p(2), p(1)};
    std::vector<int> L2{s(2)};
    append_run(L2, C1, C1 + 3);
    L2.insert(L2.end(), {s(3), p(3), p(2)});
    std::vector<int> L3{s(3), D1, s(4), p(4), p(3)};
    std::vector<int> L4{s(4)};
    append_run(L4, E1, E1 + 3);
    L4.insert(L4.end(), {s(0), p(0), p(4)});
    faces.insert(faces.end(), {L0, L1, L2, L3, L4});

    const int footA = A1 + 1, footC = C1 + 1; // ring feet of the outer spokes
    std::vector<int> alpha;                   // short ring side + o0..o5
    alpha.insert(alpha.end(), {footC, C1, s(2), B1, s(1), A1 + 3, A1 + 2, footA});
    for (int i = 0; i <= 5; ++i) alpha.push_back(o(i));
    // beta: long ring side + o5..o0
    std::vector<int> beta{footA, A1, s(0)};
    append_run_rev(beta, E1 + 3, E1);
    beta.insert(beta.end(), {s(4), D1, s(3)});
    append_run_rev(beta, C1 + 3, footC);
    for (int i = 5; i <= 10; ++i) beta.push_back(o(i));
    faces.push_back(alpha);
    faces.push_back(beta);

    std::vector<int> f0{o(0)};
    append_run_rev(f0, o0 + 9, o0 + 1);
    faces.push_back(f0);
    return from_faces(34, faces, static_cast<int>(faces.size()) - 1);
}

PlaneGraph lemma10_web() {
    // u,v,w,x,y,z = 0..5; u'=6, w'=7, x'=8, y'=9, z1=10, z2=11;
    // A1..A3 = 12..14, Z1,Z2 = 15,16, B1 = 17, C1 = 18, D1..D5 = 19..23,
    // E1..E6 = 24..29, o0..o11 = 30..41.
    const int u = 0, v = 1, w = 2, x = 3, y = 4, z = 5;
    const int up = 6, wp = 7, xp = 8, yp = 9, z1 = 10, z2 = 11;
    const int A1 = 12, Z1 = 15, B1 = 17, C1 = 18, D1 = 19, E1 = 24, o0 = 30;
    auto o = [&](int i) { return o0 + i % 12; };

    std::vector<std::vector<int>> faces;
    faces.push_back({u, v, w}); // the bad 3-face under the identity signature

    std::vector<int> f_uv{up};
    append_run(f_uv, A1, A1 + 2);
    f_uv.insert(f_uv.end(), {z1, z, y, x, v, u});
    std::vector<int> f_vw{xp};
    append_run(f_vw, D1, D1 + 4);
    f_vw.insert(f_vw.end(), {wp, w, v, x});
    std::vector<int> f_uw{wp};
    append_run(f_uw, E1, E1 + 5);
    f_uw.insert(f_uw.end(), {up, u, w});
    std::vector<int> f_mid{yp, C1, xp, x, y};
    std::vector<int> f_mid2{z2, B1, yp, y, z};
    std::vector<int> f_z{z1, Z1, Z1 + 1, z2, z};
    faces.insert(faces.end(), {f_uv, f_vw, f_uw, f_mid, f_mid2, f_z});

    // The outer spokes sit on arcs A and D so that the two faces between the
    // rings separate u' from x'; the post-deletion slot face is then unique.
    const int footA = A1 + 1, footD = D1 + 2; // A2 and D3
    std::vector<int> alpha{footD, D1 + 1, D1, xp, C1, yp, B1, z2, Z1 + 1, Z1, z1, A1 + 2, footA};
    for (int i = 0; i <= 6; ++i) alpha.push_back(o(i));
    std::vector<int> beta{footA, A1, up};
    append_run_rev(beta, E1 + 5, E1);
    beta.insert(beta.end(), {wp, D1 + 4, D1 + 3, footD});
    for (int i = 6; i <= 12; ++i) beta.push_back(o(i));
    faces.push_back(alpha);
    faces.push_back(beta);

    std::vector<int> f0{o(0)};
    append_run_rev(f0, o0 + 11, o0 + 1);
    faces.push_back(f0);
    return from_faces(42, faces, static_cast<int>(faces.size()) - 1);
}

} // namespace dpc::fixtures
