#ifndef UGTOP_COVERING_HPP
#define UGTOP_COVERING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ugtop/csp.hpp"
#include "ugtop/perm.hpp"

namespace ugtop {

enum class GroupTag { symmetric, cyclic, explicit_generators };

/// A k-sheeted covering graph given intensionally: base graph plus one
/// transition permutation per base edge. The transition on edge (u, v) maps
/// the fiber over u to the fiber over v, so a section assigns labels with
/// transition(label(u)) = label(v).
struct GCoveringGraph {
    int base_vertex_count = 0;
    std::vector<std::pair<int, int>> base_edges;
    int fiber_size = 1;
    std::vector<Perm> transitions;
    GroupTag group_tag = GroupTag::symmetric;
    std::vector<Perm> generators;              // explicit_generators only
    mutable bool membership_unchecked = false; // set when the closure cap was hit

    void validate() const;
};

/// A partial section presented by its underlying assignment together with
/// the base edges it is defined over.
struct SectionDomain {
    Assignment assignment;
    std::vector<int> satisfied_edges;  // sorted edge indices
};

GCoveringGraph label_extended(const UGInstance& inst);
GCoveringGraph label_extended(const Max2LinInstance& inst);

SectionDomain assignment_to_section(const GCoveringGraph& cover, const Assignment& s);

/// Inverse of assignment_to_section; rejects domains whose satisfied set
/// does not match the assignment.
Assignment section_to_assignment(const GCoveringGraph& cover, const SectionDomain& dom);

/// Fiberwise relabeling by per-vertex permutations g: the new transition on
/// edge (u, v) is g_v^{-1} . pi_uv . g_u. The induced dictionary on
/// assignments is s_u -> g_u^{-1}(s_u) and preserves satisfied edge sets;
/// monodromy around a walk based at r is conjugated by g_r.
GCoveringGraph relabel(const GCoveringGraph& cover, const std::vector<Perm>& g);

/// The assignment dictionary paired with relabel.
Assignment relabel_assignment(const std::vector<Perm>& g, const Assignment& s);

/// Searches for per-vertex permutations g with relabel(c1, g) == c2.
/// Enumerates candidates at one root per base component and propagates along
/// a spanning tree, verifying all non-tree edges and group membership.
std::optional<std::vector<Perm>> check_isomorphic(const GCoveringGraph& c1,
                                                  const GCoveringGraph& c2);

/// Composed transition along an edge-connected walk of oriented base edges.
/// Darts encode 2*edge for the stored orientation, 2*edge+1 for the reverse.
/// Earlier darts apply first.
Perm monodromy(const GCoveringGraph& cover, const std::vector<int>& walk_darts);

/// Expanded total space, for debugging and small fixtures only.
struct ExpandedCover {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};
ExpandedCover expand(const GCoveringGraph& cover);

} // namespace ugtop

#endif
