#ifndef UGTOP_PERM_HPP
#define UGTOP_PERM_HPP

#include <cstddef>
#include <vector>

namespace ugtop {

/// A permutation of {0..n-1} stored as its image sequence: p[i] is where i goes.
///
/// Composition convention used throughout the project: compose(a, b) applies
/// b first, i.e. compose(a, b)(x) = a(b(x)).
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_perm(const Perm& p);
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);

/// +1 for even permutations, -1 for odd.
int perm_parity(const Perm& p);

/// Cycle lengths in decreasing order (fixed points included).
std::vector<int> cycle_type(const Perm& p);

/// The shift i -> i + c (mod k) as a permutation.
Perm cyclic_shift(int k, int c);

/// If p is a cyclic shift, returns its shift amount, else -1.
int shift_amount(const Perm& p);

/// Subgroup generated by gens, enumerated by breadth-first products.
/// Returns an empty vector if the closure exceeds cap elements.
std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t cap);

/// All of S_n in lexicographic order of image sequences. n <= 8.
std::vector<Perm> symmetric_group(int n);

/// Even permutations of S_n in lexicographic order. n <= 8.
std::vector<Perm> alternating_group(int n);

} // namespace ugtop

#endif
