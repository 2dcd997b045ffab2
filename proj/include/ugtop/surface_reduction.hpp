#ifndef UGTOP_SURFACE_REDUCTION_HPP
#define UGTOP_SURFACE_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ugtop/csp.hpp"
#include "ugtop/homology.hpp"
#include "ugtop/nonabelian.hpp"
#include "ugtop/rational.hpp"
#include "ugtop/surface.hpp"

namespace ugtop {

enum class EdgeClass { Original, Connector, ParityLeaf, Star, SpokeS, CycleC, LinkL };
enum class VertexClass { Original, Leaf, Universal, Gadget, Hub };

const char* edge_class_name(EdgeClass c);
std::optional<EdgeClass> edge_class_from_name(const std::string& s);

struct Provenance {
    std::vector<EdgeClass> edge_class;      // per edge
    std::vector<VertexClass> vertex_class;  // per vertex
    std::optional<int> universal_vertex;
    bool dropped_isolated = false;
};

/// A shift instance supported on a surface: the constraints are the cocycle
/// values on the complex's edges, in stored orientation.
struct SurfaceInstance {
    SurfaceComplex complex;
    Cochain1 cocycle;
    Provenance prov;

    Max2LinInstance instance() const;
};

/// One-face reduction: connects components (one zero-shift edge each),
/// fixes edge parity with a zero-shift leaf at vertex 0 if needed, adds a
/// universal vertex with zero-shift edges to every other vertex, and embeds
/// with one face via the star-tree certificate at the universal vertex.
/// Adds at most 3v/2 + 1 edges. Isolated vertices are dropped first.
SurfaceInstance graph_to_one_face(const Max2LinInstance& inst);

/// Unique Games variant of the same construction; added edges carry the
/// identity permutation.
struct CoverSurfaceInstance {
    SurfaceComplex complex;
    NonAbCochain1 labels;
    Provenance prov;
};
CoverSurfaceInstance graph_to_one_face_ug(const UGInstance& inst);

/// Triangulation gadget for a one-face instance whose walk has length 2e:
/// one gadget vertex per walk position plus a hub, spoke edges S (2e), cycle
/// edges C (2e) and link edges L (4e). Every e_{i,l} and the spoke at walk
/// position 0 get shift zero; every other new shift is deduced as the unique
/// value closing its triangle, in order L, C, S around the walk. The result
/// has v + 2e + 1 vertices, 9e edges and 6e triangular faces.
SurfaceInstance triangulate_face(const SurfaceInstance& si);

struct GapReport {
    Rat rho_in;    // optimum fraction of the input instance
    Rat rho_out;   // optimum fraction of the triangulated instance
    Rat lower;     // (2 + 5 rho_in) / 9
    Rat upper;     // (2 + rho_in) / 3
    long long best_in = 0;
    long long best_out = 0;
    bool ok = false;
};

/// Brute-forces both optima and checks the sandwich
/// (2 + 5 rho) / 9 <= rho'' <= (2 + rho) / 3.
GapReport gap_bounds_check(const SurfaceInstance& si_in, const SurfaceInstance& si_out,
                           std::uint64_t budget = std::uint64_t(1) << 26);

} // namespace ugtop

#endif
