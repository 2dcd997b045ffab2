#ifndef UGTOP_CSP_HPP
#define UGTOP_CSP_HPP

#include <cstdint>
#include <vector>

#include "ugtop/perm.hpp"
#include "ugtop/rational.hpp"

namespace ugtop {

/// A label per vertex, each in {0..k-1}.
using Assignment = std::vector<int>;

/// Constraint "label(v) = pi(label(u))". Stored once per undirected edge
/// with this fixed orientation; the reverse view uses the inverse permutation.
struct UGConstraint {
    int u = 0;
    int v = 0;
    Perm pi;

    bool operator==(const UGConstraint&) const = default;
};

/// Unique Games instance: k-ary domains, one bijection per constraint edge.
/// Multi-edges allowed, self-loops rejected.
struct UGInstance {
    int k = 1;
    int vertex_count = 0;
    std::vector<UGConstraint> constraints;

    void validate() const;
};

/// Constraint "x_u - x_v = c (mod k)".
struct LinConstraint {
    int u = 0;
    int v = 0;
    int c = 0;

    bool operator==(const LinConstraint&) const = default;
};

struct Max2LinInstance {
    int k = 2;
    int vertex_count = 0;
    std::vector<LinConstraint> constraints;

    void validate() const;

    /// The same instance as Unique Games; reading a constraint forward gives
    /// the shift transition i -> i - c (mod k), so the reverse orientation
    /// carries -c.
    UGInstance to_ug() const;
};

long long satisfied_count(const UGInstance& inst, const Assignment& s);
long long satisfied_count(const Max2LinInstance& inst, const Assignment& s);

/// Fraction of constraints satisfied, exact.
Rat value(const UGInstance& inst, const Assignment& s);
Rat value(const Max2LinInstance& inst, const Assignment& s);

struct BruteOptions {
    std::uint64_t budget = std::uint64_t(1) << 26;
    int threads = 1;
};

struct OptResult {
    long long best_count = 0;
    Assignment witness;
};

/// Exhaustive optimum over all k^n assignments. The witness is the
/// lexicographically least optimal assignment, independent of thread count.
OptResult opt_brute(const UGInstance& inst, const BruteOptions& opt = {});
OptResult opt_brute(const Max2LinInstance& inst, const BruteOptions& opt = {});

/// Greedy assignment satisfying at least ceil(v+/2) constraints, where v+ is
/// the number of vertices of degree >= 1. Vertices are processed in
/// ascending id order; an unused vertex picks its least-id incident edge and
/// the least label satisfying it.
Assignment greedy_half(const UGInstance& inst);
Assignment greedy_half(const Max2LinInstance& inst);

long long greedy_bound(const UGInstance& inst);
long long greedy_bound(const Max2LinInstance& inst);

/// Padding arithmetic for edge-adding reductions: adding at most a*v edges
/// moves a (1-eps, delta) gap to (1-eps-Delta, delta+Delta) for any Delta
/// strictly between 2*delta*a/(1+2*delta*a) and 1.
struct GapParams {
    Rat eps;
    Rat delta;
    Rat a;
    Rat Delta;

    Rat eps0() const { return eps + Delta; }
    Rat delta0() const { return delta + Delta; }
};

/// Picks Delta = lower * 101/100, or 1/1000 when the lower bound is zero.
/// Throws input_error ("gap collapsed") if Delta >= 1 or eps + Delta >= 1.
GapParams pad_gap(const Rat& eps, const Rat& delta, const Rat& a);

/// Deterministic planted-instance generator on a configuration-model
/// multigraph. Each constraint is set to the value satisfied by a hidden
/// assignment, then independently corrupted with probability noise by a
/// uniform nonzero offset.
Max2LinInstance gen_planted(int n, int degree, int k, double noise, std::uint64_t seed);

} // namespace ugtop

#endif
