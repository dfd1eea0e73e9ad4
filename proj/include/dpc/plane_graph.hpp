#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dpc/errors.hpp"

namespace dpc {

// Combinatorial embedding of a simple connected plane graph.
//
// Darts are half-edges: edge e owns darts 2e and 2e+1, twins of each other.
// Every vertex carries its outgoing darts in clockwise order. Faces are the
// orbits of the walk "follow the dart, then take the next dart clockwise
// around its head after the twin"; one face, designated by a dart, is the
// unbounded face f0. Instances are immutable after build(); all queries are
// const and safe to share across threads.
class PlaneGraph {
public:
    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(dart_tail_.size()) / 2; }
    int num_darts() const { return static_cast<int>(dart_tail_.size()); }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    static int twin(int d) { return d ^ 1; }
    static int edge_of(int d) { return d >> 1; }
    int tail(int d) const { return dart_tail_[d]; }
    int head(int d) const { return dart_tail_[twin(d)]; }

    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    int rot_next(int d) const;
    int face_next(int d) const { return rot_next(twin(d)); }

    int face_of(int d) const { return face_of_[d]; }
    const std::vector<int>& face_darts(int f) const { return faces_[f]; }
    std::vector<int> face_vertices(int f) const; // tails along the walk
    int face_size(int f) const { return static_cast<int>(faces_[f].size()); }
    int outer_face() const { return f0_; }
    int outer_dart() const { return outer_dart_; }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    int dart_between(int u, int v) const; // dart u->v, or -1
    bool adjacent(int u, int v) const { return dart_between(u, v) >= 0; }
    std::pair<int, int> edge_endpoints(int e) const { return {tail(2 * e), head(2 * e)}; }

    bool is_external(int v) const { return external_[v]; }
    std::vector<int> face_sizes_at(int v) const; // one entry per corner at v

    bool is_connected() const { return connected_; }
    bool is_two_connected() const;

    void check_vertex(int v) const;

    friend PlaneGraph build(const std::vector<std::vector<int>>& neighbor_lists,
                            int outer_tail, int outer_head, bool require_connected);

private:
    int n_ = 0;
    std::vector<int> dart_tail_;
    std::vector<std::vector<int>> rot_;   // per-vertex outgoing darts, clockwise
    std::vector<int> rot_pos_;            // dart -> index in rot_[tail]
    std::vector<int> face_of_;
    std::vector<std::vector<int>> faces_; // face -> dart walk
    std::vector<char> external_;
    int outer_dart_ = 0;
    int f0_ = 0;
    bool connected_ = true;
};

// neighbor_lists[v] is the clockwise sequence of neighbors of v (0-based).
// The outer face is the face walk containing the dart outer_tail -> outer_head.
PlaneGraph build(const std::vector<std::vector<int>>& neighbor_lists,
                 int outer_tail, int outer_head, bool require_connected = true);

// Rebuild with the outer face designated by the dart u->v.
PlaneGraph with_outer(const PlaneGraph& g, int u, int v);

// `.pg` text format, 1-based vertex ids:
//   vertices: n
//   i: j k l ...      (clockwise neighbor order)
//   outer: i j        (the dart i->j lies on the outer face walk)
PlaneGraph parse_pg(std::istream& in);
PlaneGraph parse_pg_string(const std::string& text);
PlaneGraph load_pg(const std::string& path);
std::string to_pg(const PlaneGraph& g);

struct GraphClassReport {
    bool is_simple = true;
    bool is_connected = false;
    bool is_two_connected = false;
    std::vector<std::vector<int>> forbidden_cycles_found; // lengths 4, 7, 9
    bool in_class_g = false;
};

GraphClassReport classify(const PlaneGraph& g);

} // namespace dpc
