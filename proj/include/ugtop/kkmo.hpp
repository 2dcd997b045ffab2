#ifndef UGTOP_KKMO_HPP
#define UGTOP_KKMO_HPP

#include <cstdint>
#include <vector>

#include "ugtop/csp.hpp"

namespace ugtop {

/// Canonical representative of a folded tuple: subtract the first coordinate
/// from every coordinate mod q, so coords[0] == 0. Two raw tuples fold to
/// the same representative iff they differ by a constant vector.
std::vector<int> fold_canonical(std::vector<int> raw, int q);

/// Coordinate-permuting action used by the reduction:
/// (t^sigma)[sigma(m)] = t[m]. Folding commutes with it.
std::vector<int> act_tuple(const std::vector<int>& t, const Perm& sigma);

/// Number of folded tuples, q^(k-1).
long long folded_count(int k, int q);

/// Lexicographic rank of a canonical tuple among canonical tuples.
long long tuple_rank(const std::vector<int>& canonical, int q);
std::vector<int> tuple_unrank(long long rank, int k, int q);

/// Vertex id of (base vertex i, canonical tuple t) in the reduced instance.
long long reduced_vertex_id(int i, const std::vector<int>& t, int q);

/// Two-step squaring: one constraint per unordered pair of distinct edge
/// occurrences sharing a vertex, carrying the composed permutation. Pairs
/// whose outer endpoints coincide are skipped (they would form self-loops).
/// Original edges are dropped unless keep_original is set.
UGInstance square(const UGInstance& inst, bool keep_original = false);

/// Reduction from Unique Games to shift constraints over Z_q: squares the
/// instance, replaces each vertex by the q^(k-1) folded tuples, and emits
/// one constraint per (squared edge, tuple). Constraints are ordered by
/// (squared edge index, tuple rank).
Max2LinInstance kkmo_reduce(const UGInstance& inst, int q,
                            std::uint64_t budget = std::uint64_t(1) << 26);

/// Transports a relabeling witness of the input cover to per-vertex shifts
/// for the reduced instance: c(i, t) = t[0] - t[g_i(0)] on the canonical
/// representative. Together with the vertex renaming of reduced_renaming,
/// relabeling kkmo_reduce(inst) by these shifts equals
/// kkmo_reduce(relabeled instance) exactly.
std::vector<int> transport_iso(const UGInstance& inst, const std::vector<Perm>& g, int q);

/// The base-vertex renaming induced by a relabeling witness:
/// (i, t) -> (i, fold(t^(g_i^-1))). Returns old id -> new id.
std::vector<long long> reduced_renaming(const UGInstance& inst, const std::vector<Perm>& g, int q);

/// Applies a relabeling witness to the instance itself (transition view).
UGInstance relabel_instance(const UGInstance& inst, const std::vector<Perm>& g);

} // namespace ugtop

#endif
