#ifndef UGTOP_NONABELIAN_HPP
#define UGTOP_NONABELIAN_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ugtop/perm.hpp"
#include "ugtop/surface.hpp"

namespace ugtop {

/// Group-valued cochains: one permutation per vertex / per oriented edge.
/// Reversing an edge inverts its element.
struct NonAbCochain0 {
    std::vector<Perm> values;
};
struct NonAbCochain1 {
    std::vector<Perm> values;
};

int nonab_support(const NonAbCochain1& f);

/// Ordered product of f along a dart walk, inverting on reversed darts;
/// earlier darts apply first.
Perm walk_product(const NonAbCochain1& f, const std::vector<int>& walk,
                  const SurfaceComplex& X);

/// True iff the walk product around every face is the identity.
bool nonab_is_cocycle(const NonAbCochain1& f, const SurfaceComplex& X);

/// The 0-cochain action (f^c)(e) = c(x) f(e) c(y)^{-1} for e: x -> y, read
/// in walk order (c(x) applies first). Sends cocycles to cocycles. An edge
/// has (f^c)(e) = identity exactly when the assignment c extends over it as
/// a section of the principal cover.
NonAbCochain1 act0(const NonAbCochain0& c, const NonAbCochain1& f, const SurfaceComplex& X);

/// Writes g as a commutator h^{-1} k^{-1} h k (k applied first), searching
/// pairs of S_n elements in lexicographic order and verifying the witness
/// before returning. Requires g even; n <= 8.
std::pair<Perm, Perm> commutator_decompose(const Perm& g);

/// Same search restricted to an explicit element list.
std::optional<std::pair<Perm, Perm>> commutator_decompose_in(const std::vector<Perm>& group,
                                                             const Perm& g);

struct PatchResult {
    SurfaceComplex complex;
    NonAbCochain1 labels;
    int base_vertex = 0;   // walk base x
    Perm walk_value;       // product before patching
    Perm commutator_h;
    Perm commutator_k;
};

/// Commutator patch for a one-face complex: appends two 3-cycles
/// x -> x1 -> x2 -> x and x -> y1 -> y2 -> x at the walk base x, with
/// identity labels on the edges at x and the commutator witnesses on
/// (x1, x2) and (y1, y2), oriented so that the extended face-walk product is
/// the identity (verified). When universal_vertex is given, the four new
/// vertices are also joined to it by identity-labeled edges, keeping the
/// star-tree certificate; the complex stays one-faced throughout.
PatchResult patch_cell(const SurfaceComplex& X, const NonAbCochain1& f,
                       std::optional<int> universal_vertex = std::nullopt);

struct NonAbCoholocResult {
    long long min_support = 0;
    NonAbCochain0 witness;
};

/// Exact sparsest cohomologous representative over an explicit group:
/// minimizes the number of non-identity edges of f^c over assignments c
/// with c = identity at one root per component.
NonAbCoholocResult coholoc_nonab_brute(const SurfaceComplex& X, const NonAbCochain1& f,
                                       const std::vector<Perm>& group,
                                       std::uint64_t budget = std::uint64_t(1) << 26);

/// Triple-overlap composition law on triangulated complexes: each triangle's
/// transitions must compose consistently. Falls back to the general face
/// product test on non-triangular faces, setting *used_general.
bool principal_cover_check(const NonAbCochain1& transitions, const SurfaceComplex& X,
                           bool* used_general = nullptr);

} // namespace ugtop

#endif
