// Combinatorial plane graphs given by clockwise rotation systems with a
// designated outer cycle.  Everything downstream (coloring, flows, layouts,
// criticality) lives on top of this representation.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trifree {

using Vertex = int;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlaneGraph {
    std::vector<std::string> name;             // vertex id -> name
    std::vector<std::vector<Vertex>> rot;      // clockwise neighbor lists
    std::vector<Vertex> outer;                 // outer cycle, clockwise
    bool triangle_free = true;

    int vertex_count() const { return static_cast<int>(rot.size()); }
    int edge_count() const;
    int degree(Vertex v) const { return static_cast<int>(rot[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool on_outer(Vertex v) const;
    int outer_index(Vertex v) const;           // -1 if not on the outer cycle

    // Position of u within rot[v]; -1 if absent.
    int rot_index(Vertex v, Vertex u) const;
};

// One face as its clockwise boundary walk.  face_of_dart maps the dart
// (u, v) -- encoded as u * n + v -- to the face lying on its right.
struct FaceSet {
    std::vector<std::vector<Vertex>> faces;
    int outer_face = -1;
    std::vector<long long> dart_keys;          // parallel to dart_faces
    std::vector<int> dart_faces;

    int face_of_dart(const PlaneGraph& g, Vertex u, Vertex v) const;
    int face_length(int f) const { return static_cast<int>(faces[f].size()); }
    // Multiset of internal face lengths >= 5, sorted ascending: the paper's S(G).
    std::vector<int> internal_5plus() const;
    std::vector<int> internal_faces() const;   // face ids, outer excluded
};

void validate(const PlaneGraph& g);
FaceSet faces(const PlaneGraph& g);

PlaneGraph parse_graph(const std::string& text);
std::string format_graph(const PlaneGraph& g);

struct CycleInfo {
    std::vector<Vertex> cycle;
    bool facial = false;
    bool separating = false;                   // removing V(cycle) disconnects g
};

// All simple cycles of length <= maxlen (maxlen <= 9 expected at call sites).
std::vector<CycleInfo> cycles_up_to(const PlaneGraph& g, int maxlen);

// Faces strictly inside the cycle (the side not containing the outer face).
std::vector<int> faces_inside(const PlaneGraph& g, const FaceSet& fs,
                              const std::vector<Vertex>& cycle);

// Subgraph drawn in the closed disk bounded by `cycle`, with `cycle` as the
// new outer cycle.  Throws GraphError if `cycle` is not a cycle of g.
PlaneGraph disk_subgraph(const PlaneGraph& g, const std::vector<Vertex>& cycle);

// Canonical string for outer-rooted plane graphs: minimum over the |C|
// starting edges and the two reflections of a BFS relabeling that respects
// rotations.  Equal strings == isomorphic as plane graphs rooted at C.
std::string canonical_form(const PlaneGraph& g);

// Assemble a plane graph from its full face list.  `internal` holds every
// internal face as a clockwise walk; the outer walk is `outer` (clockwise).
// Throws GraphError when the walks do not define a consistent embedding.
PlaneGraph from_faces(const std::vector<Vertex>& outer,
                      const std::vector<std::vector<Vertex>>& internal,
                      int n_vertices,
                      std::vector<std::string> names = {});

// Quadrangulate an even region (boundary walk given clockwise) with a ladder
// of 4-faces, or a fan around a fresh center ("fan").  Appends the produced
// faces to `out`; fan allocates one vertex via next_vertex.
void fill_region(const std::vector<Vertex>& boundary, const std::string& style,
                 std::vector<std::vector<Vertex>>& out, int& next_vertex,
                 std::vector<std::string>* names);

}  // namespace trifree
