#ifndef UGTOP_SURFACE_HPP
#define UGTOP_SURFACE_HPP

#include <optional>
#include <utility>
#include <vector>

namespace ugtop {

/// Darts: edge e yields dart 2e traversing u -> v and dart 2e+1 traversing
/// v -> u, where (u, v) is the stored edge orientation.
inline int dart_fwd(int e) { return 2 * e; }
inline int dart_rev(int e) { return 2 * e + 1; }
inline int dart_edge(int d) { return d >> 1; }
inline bool dart_forward(int d) { return (d & 1) == 0; }
inline int dart_reverse(int d) { return d ^ 1; }

/// Combinatorial cell decomposition of a closed orientable surface, given by
/// a rotation system: a cyclic order of outgoing darts at each vertex.
/// Faces are derived by tracing and cached.
struct SurfaceComplex {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;   // multi-edges and loops allowed
    std::vector<std::vector<int>> rotation;   // per vertex, outgoing darts
    std::vector<std::vector<int>> faces;      // derived dart walks

    int dart_tail(int d) const {
        const auto& e = edges[dart_edge(d)];
        return dart_forward(d) ? e.first : e.second;
    }
    int dart_head(int d) const {
        const auto& e = edges[dart_edge(d)];
        return dart_forward(d) ? e.second : e.first;
    }

    int edge_count() const { return (int)edges.size(); }
    int face_count() const { return (int)faces.size(); }

    /// Recomputes faces from the rotation system.
    void retrace();

    /// Checks rotation well-formedness and the dart coverage invariants.
    void validate() const;

    int component_count() const;

    /// V - E + F over the whole complex.
    int euler_characteristic() const;

    /// Sum of per-component genera; each component must have even
    /// characteristic <= 2.
    int genus() const;

    /// face index containing each dart; -1 before tracing.
    std::vector<int> face_of_dart() const;
};

/// Face tracing for orientable rotation systems: the successor of dart d is
/// the dart after reverse(d) in the rotation at head(d). Faces are the
/// orbits, each reported starting from its least dart and sorted by that
/// least dart.
std::vector<std::vector<int>> trace_faces(int vertex_count,
                                          const std::vector<std::pair<int, int>>& edges,
                                          const std::vector<std::vector<int>>& rotation);

/// Builds a complex from vertices, edges and rotation, tracing faces.
SurfaceComplex make_complex(int vertex_count,
                            std::vector<std::pair<int, int>> edges,
                            std::vector<std::vector<int>> rotation);

/// Witness that a connected graph admits a one-face cellular embedding:
/// a spanning tree whose co-tree components all have an even number of
/// edges, together with a decomposition of each component into pairs of
/// adjacent edges.
struct XuongCertificate {
    std::vector<int> tree_edges;
    std::vector<std::pair<int, int>> pairing;
};

/// Searches star trees of max-degree vertices first, then BFS trees from
/// each vertex; when all fail and the graph has at most 16 edges, falls back
/// to exhaustive spanning-tree enumeration. Failure on small graphs
/// therefore coincides with nonexistence.
std::optional<XuongCertificate> xuong_certificate(int vertex_count,
                                                  const std::vector<std::pair<int, int>>& edges);

/// Decomposes a connected edge subset with an even number of edges into
/// pairs of adjacent edges, by bottom-up matching over a depth-first tree.
std::optional<std::vector<std::pair<int, int>>> pair_adjacent_edges(
    int vertex_count, const std::vector<std::pair<int, int>>& edges,
    const std::vector<int>& edge_ids);

/// Constructive one-face embedding: embeds the spanning tree (one face),
/// then inserts each certified pair so that its endpoint corners interleave
/// along the current face walk. The result has exactly one face and genus
/// (E - V + 1) / 2.
SurfaceComplex one_face_embed(int vertex_count,
                              const std::vector<std::pair<int, int>>& edges,
                              const XuongCertificate& cert);

/// Dual cell decomposition: dual vertices are primal faces, dual edge i
/// crosses primal edge i oriented from the face containing dart +i to the
/// face containing dart -i, and dual faces correspond to primal vertices.
SurfaceComplex dual_complex(const SurfaceComplex& c);

} // namespace ugtop

#endif
