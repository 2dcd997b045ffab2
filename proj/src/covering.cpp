#include "ugtop/covering.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "ugtop/errors.hpp"

namespace ugtop {

namespace {

constexpr std::size_t kClosureCap = 40321;  // 8! + 1

std::vector<int> base_components(const GCoveringGraph& c) {
    std::vector<int> comp(c.base_vertex_count, -1);
    int next = 0;
    for (int s = 0; s < c.base_vertex_count; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::deque<int> queue{s};
        // adjacency by scanning edges; fine at these sizes
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const auto& e : c.base_edges) {
                int other = -1;
                if (e.first == u) other = e.second;
                else if (e.second == u) other = e.first;
                if (other >= 0 && comp[other] == -1) {
                    comp[other] = next;
                    queue.push_back(other);
                }
            }
        }
        ++next;
    }
    return comp;
}

} // namespace

void GCoveringGraph::validate() const {
    if (fiber_size < 1) throw input_error("GCoveringGraph: fiber size must be >= 1");
    if (base_edges.size() != transitions.size())
        throw input_error("GCoveringGraph: one transition per base edge required");
    for (const auto& e : base_edges)
        if (e.first < 0 || e.first >= base_vertex_count || e.second < 0 ||
            e.second >= base_vertex_count)
            throw input_error("GCoveringGraph: edge endpoint out of range");
    for (const auto& t : transitions)
        if ((int)t.size() != fiber_size || !is_perm(t))
            throw input_error("GCoveringGraph: transition is not a bijection on the fiber");
    if (group_tag == GroupTag::cyclic) {
        for (const auto& t : transitions)
            if (shift_amount(t) < 0)
                throw input_error("GCoveringGraph: cyclic cover with a non-shift transition");
    } else if (group_tag == GroupTag::explicit_generators) {
        auto elems = closure(generators, kClosureCap);
        if (elems.empty() && !generators.empty()) {
            // closure too large to enumerate; accepted unchecked
            membership_unchecked = true;
            return;
        }
        std::set<Perm> in_group(elems.begin(), elems.end());
        if (generators.empty()) in_group.insert(identity_perm(fiber_size));
        for (const auto& t : transitions)
            if (!in_group.count(t))
                throw input_error("GCoveringGraph: transition outside the generated group");
    }
}

GCoveringGraph label_extended(const UGInstance& inst) {
    inst.validate();
    GCoveringGraph cover;
    cover.base_vertex_count = inst.vertex_count;
    cover.fiber_size = inst.k;
    cover.group_tag = GroupTag::symmetric;
    for (const auto& c : inst.constraints) {
        cover.base_edges.push_back({c.u, c.v});
        cover.transitions.push_back(c.pi);
    }
    return cover;
}

GCoveringGraph label_extended(const Max2LinInstance& inst) {
    GCoveringGraph cover = label_extended(inst.to_ug());
    cover.group_tag = GroupTag::cyclic;
    return cover;
}

SectionDomain assignment_to_section(const GCoveringGraph& cover, const Assignment& s) {
    if ((int)s.size() != cover.base_vertex_count)
        throw input_error("assignment_to_section: size mismatch");
    for (int v : s)
        if (v < 0 || v >= cover.fiber_size)
            throw input_error("assignment_to_section: label out of range");
    SectionDomain dom;
    dom.assignment = s;
    for (int e = 0; e < (int)cover.base_edges.size(); ++e) {
        auto [u, v] = cover.base_edges[e];
        if (cover.transitions[e][s[u]] == s[v]) dom.satisfied_edges.push_back(e);
    }
    return dom;
}

Assignment section_to_assignment(const GCoveringGraph& cover, const SectionDomain& dom) {
    SectionDomain expect = assignment_to_section(cover, dom.assignment);
    if (expect.satisfied_edges != dom.satisfied_edges)
        throw input_error("section_to_assignment: satisfied set does not match the assignment");
    return dom.assignment;
}

GCoveringGraph relabel(const GCoveringGraph& cover, const std::vector<Perm>& g) {
    if ((int)g.size() != cover.base_vertex_count)
        throw input_error("relabel: one permutation per base vertex required");
    for (const auto& p : g) {
        if ((int)p.size() != cover.fiber_size || !is_perm(p))
            throw input_error("relabel: invalid per-vertex permutation");
        if (cover.group_tag == GroupTag::cyclic && shift_amount(p) < 0)
            throw input_error("relabel: permutation outside the cyclic group");
    }
    if (cover.group_tag == GroupTag::explicit_generators && !cover.membership_unchecked) {
        auto elems = closure(cover.generators, kClosureCap);
        std::set<Perm> in_group(elems.begin(), elems.end());
        if (cover.generators.empty()) in_group.insert(identity_perm(cover.fiber_size));
        for (const auto& p : g)
            if (!in_group.count(p))
                throw input_error("relabel: permutation outside the declared group");
    }
    GCoveringGraph out = cover;
    for (int e = 0; e < (int)cover.base_edges.size(); ++e) {
        auto [u, v] = cover.base_edges[e];
        out.transitions[e] = compose(inverse(g[v]), compose(cover.transitions[e], g[u]));
    }
    return out;
}

Assignment relabel_assignment(const std::vector<Perm>& g, const Assignment& s) {
    if (g.size() != s.size()) throw input_error("relabel_assignment: size mismatch");
    Assignment out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = inverse(g[i])[s[i]];
    return out;
}

std::optional<std::vector<Perm>> check_isomorphic(const GCoveringGraph& c1,
                                                  const GCoveringGraph& c2) {
    if (c1.base_vertex_count != c2.base_vertex_count || c1.base_edges != c2.base_edges ||
        c1.fiber_size != c2.fiber_size || c1.group_tag != c2.group_tag)
        throw input_error("check_isomorphic: base graph, fiber or group mismatch");

    int k = c1.fiber_size;
    std::vector<Perm> candidates;
    switch (c1.group_tag) {
        case GroupTag::symmetric:
            if (k > 8) throw budget_error("check_isomorphic: symmetric fiber too large (k > 8)");
            candidates = symmetric_group(k);
            break;
        case GroupTag::cyclic:
            for (int c = 0; c < k; ++c) candidates.push_back(cyclic_shift(k, c));
            break;
        case GroupTag::explicit_generators: {
            candidates = closure(c1.generators, kClosureCap);
            if (candidates.empty()) candidates.push_back(identity_perm(k));
            break;
        }
    }
    std::set<Perm> in_group(candidates.begin(), candidates.end());

    // incidence lists: (edge, other endpoint, oriented from u)
    int n = c1.base_vertex_count;
    std::vector<std::vector<std::pair<int, int>>> inc(n);  // (edge, neighbor)
    for (int e = 0; e < (int)c1.base_edges.size(); ++e) {
        auto [u, v] = c1.base_edges[e];
        inc[u].push_back({e, v});
        if (u != v) inc[v].push_back({e, u});
    }

    std::vector<int> comp = base_components(c1);
    int comp_count = 0;
    for (int c : comp) comp_count = std::max(comp_count, c + 1);
    std::vector<int> root(comp_count, -1);
    for (int v = n - 1; v >= 0; --v) root[comp[v]] = v;

    std::vector<Perm> witness(n);
    std::vector<char> assigned(n, 0);

    for (int c = 0; c < comp_count; ++c) {
        bool found = false;
        for (const Perm& g0 : candidates) {
            // propagate g along a BFS tree from the root
            std::vector<Perm> g(n);
            std::vector<char> have(n, 0);
            g[root[c]] = g0;
            have[root[c]] = 1;
            std::deque<int> queue{root[c]};
            bool ok = true;
            while (!queue.empty() && ok) {
                int u = queue.front();
                queue.pop_front();
                for (auto [e, w] : inc[u]) {
                    // transition from u to w in both covers
                    bool fwd = c1.base_edges[e].first == u;
                    Perm t1 = fwd ? c1.transitions[e] : inverse(c1.transitions[e]);
                    Perm t2 = fwd ? c2.transitions[e] : inverse(c2.transitions[e]);
                    // pi2 = g_w^{-1} pi1 g_u  =>  g_w = pi1 g_u pi2^{-1}
                    Perm gw = compose(t1, compose(g[u], inverse(t2)));
                    if (!have[w]) {
                        if (!in_group.count(gw)) {
                            ok = false;
                            break;
                        }
                        g[w] = gw;
                        have[w] = 1;
                        queue.push_back(w);
                    } else if (g[w] != gw) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            for (int v = 0; v < n && ok; ++v)
                if (comp[v] == c && !have[v]) ok = false;  // unreachable; cannot happen
            if (ok) {
                for (int v = 0; v < n; ++v)
                    if (comp[v] == c) {
                        witness[v] = g[v];
                        assigned[v] = 1;
                    }
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    for (int v = 0; v < n; ++v)
        if (!assigned[v]) witness[v] = identity_perm(k);

    return witness;
}

Perm monodromy(const GCoveringGraph& cover, const std::vector<int>& walk_darts) {
    Perm acc = identity_perm(cover.fiber_size);
    int at = -1;
    for (int d : walk_darts) {
        int e = d >> 1;
        bool fwd = (d & 1) == 0;
        if (e < 0 || e >= (int)cover.base_edges.size())
            throw input_error("monodromy: dart out of range");
        auto [u, v] = cover.base_edges[e];
        int tail = fwd ? u : v;
        int head = fwd ? v : u;
        if (at != -1 && at != tail) throw input_error("monodromy: walk is not edge-connected");
        at = head;
        Perm step = fwd ? cover.transitions[e] : inverse(cover.transitions[e]);
        acc = compose(step, acc);
    }
    return acc;
}

ExpandedCover expand(const GCoveringGraph& cover) {
    ExpandedCover out;
    out.vertex_count = cover.base_vertex_count * cover.fiber_size;
    for (int e = 0; e < (int)cover.base_edges.size(); ++e) {
        auto [u, v] = cover.base_edges[e];
        for (int i = 0; i < cover.fiber_size; ++i)
            out.edges.push_back({u * cover.fiber_size + i,
                                 v * cover.fiber_size + cover.transitions[e][i]});
    }
    return out;
}

} // namespace ugtop
