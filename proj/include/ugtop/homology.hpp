#ifndef UGTOP_HOMOLOGY_HPP
#define UGTOP_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "ugtop/csp.hpp"
#include "ugtop/surface.hpp"

namespace ugtop {

/// Z_k coefficient vectors over cells of the respective dimension.
/// Edge coefficients are read against the stored edge orientation; reversing
/// an edge negates its coefficient.
struct Cochain0 {
    int k = 2;
    std::vector<int> values;  // per vertex
};
struct Cochain1 {
    int k = 2;
    std::vector<int> values;  // per oriented edge
};
struct Chain0 {
    int k = 2;
    std::vector<int> values;  // per vertex
};
struct Chain1 {
    int k = 2;
    std::vector<int> values;  // per oriented edge
};
struct Chain2 {
    int k = 2;
    std::vector<int> values;  // per face
};

int support(const std::vector<int>& values);

/// Boundary of an edge (u, v) is [u] - [v], extended linearly.
Chain0 boundary1(const Chain1& c, const SurfaceComplex& X);

/// Boundary of a 2-cell is its face walk with signs, extended linearly.
Chain1 boundary2(const Chain2& c, const SurfaceComplex& X);

/// (delta f)(u -> v) = f(u) - f(v), so that a shift constraint x_u - x_v = c
/// is satisfied by alpha exactly when (a - delta alpha) vanishes on its edge.
Cochain1 coboundary0(const Cochain0& f, const SurfaceComplex& X);

bool is_cycle(const Chain1& z, const SurfaceComplex& X);

/// True iff the signed sum around every face is zero.
bool is_cocycle(const Cochain1& f, const SurfaceComplex& X);

/// a - delta(alpha).
Cochain1 residual(const Cochain1& a, const Cochain0& alpha, const SurfaceComplex& X);

struct CoholocResult {
    long long min_support = 0;
    Cochain0 witness;  // alpha, zero at one root per component
};

/// Exact sparsest cohomologous representative: minimizes
/// support(a - delta alpha) over all 0-cochains alpha, fixing alpha = 0 at
/// the least vertex of each component. Witness is lexicographically least.
CoholocResult coholoc_brute(const SurfaceComplex& X, const Cochain1& a,
                            std::uint64_t budget = std::uint64_t(1) << 26);

struct HomlocResult {
    long long min_support = 0;
    Chain2 witness;
};

/// Exact sparsest homologous representative: minimizes support(z - d2 b)
/// over all 2-chains b. Witness is lexicographically least.
HomlocResult homloc_brute(const SurfaceComplex& X, const Chain1& z,
                          std::uint64_t budget = std::uint64_t(1) << 26);

/// The shift constraints of a surface-supported instance as a 1-cochain on
/// X; constraint i sits on edge i in the stored orientation. Throws
/// input_error ("not a surface instance") when some face sum is nonzero.
Cochain1 maxlin_to_cocycle(const Max2LinInstance& inst, const SurfaceComplex& X);

/// Inverse view of the dictionary: the instance whose constraints are the
/// cochain values.
Max2LinInstance cocycle_to_maxlin(const SurfaceComplex& X, const Cochain1& a);

/// Given cohomologous a and aprime, recovers the assignment alpha with
/// a - delta alpha = aprime and alpha = 0 at each component root.
Assignment representative_to_assignment(const SurfaceComplex& X,
                                        const Cochain1& a, const Cochain1& aprime);

/// Poincare transport: copies the coefficient of each primal edge to its
/// dual edge. Takes the dual complex as built by dual_complex(X).
Cochain1 dual_transport(const Chain1& z, const SurfaceComplex& X,
                        const SurfaceComplex& Xdual);

} // namespace ugtop

#endif
