#include "ugtop/nonabelian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "ugtop/errors.hpp"

namespace ugtop {

int nonab_support(const NonAbCochain1& f) {
    int s = 0;
    for (const Perm& p : f.values)
        if (p != identity_perm((int)p.size())) ++s;
    return s;
}

Perm walk_product(const NonAbCochain1& f, const std::vector<int>& walk,
                  const SurfaceComplex& X) {
    if (f.values.size() != X.edges.size()) throw input_error("walk_product: size mismatch");
    if (f.values.empty()) throw input_error("walk_product: empty labeling");
    Perm acc = identity_perm((int)f.values[0].size());
    for (int d : walk) {
        const Perm& g = f.values[(std::size_t)dart_edge(d)];
        acc = compose(dart_forward(d) ? g : inverse(g), acc);
    }
    return acc;
}

bool nonab_is_cocycle(const NonAbCochain1& f, const SurfaceComplex& X) {
    if (f.values.size() != X.edges.size()) throw input_error("nonab_is_cocycle: size mismatch");
    if (f.values.empty()) return true;
    Perm id = identity_perm((int)f.values[0].size());
    for (const auto& face : X.faces)
        if (walk_product(f, face, X) != id) return false;
    return true;
}

NonAbCochain1 act0(const NonAbCochain0& c, const NonAbCochain1& f, const SurfaceComplex& X) {
    if ((int)c.values.size() != X.vertex_count || f.values.size() != X.edges.size())
        throw input_error("act0: size mismatch");
    NonAbCochain1 out = f;
    for (int e = 0; e < X.edge_count(); ++e) {
        auto [x, y] = X.edges[(std::size_t)e];
        // c(x) f(e) c(y)^{-1} read in walk order: c(x) applies first, so the
        // inserted factors cancel between consecutive darts of a face walk
        out.values[(std::size_t)e] =
            compose(inverse(c.values[(std::size_t)y]),
                    compose(f.values[(std::size_t)e], c.values[(std::size_t)x]));
    }
    return out;
}

namespace {

Perm commutator(const Perm& h, const Perm& k) {
    // h^{-1} k^{-1} h k, k applied first
    return compose(inverse(h), compose(inverse(k), compose(h, k)));
}

} // namespace

std::pair<Perm, Perm> commutator_decompose(const Perm& g) {
    int n = (int)g.size();
    if (!is_perm(g)) throw input_error("commutator_decompose: not a permutation");
    if (n > 8) throw budget_error("commutator_decompose: n > 8 not supported by brute search");
    if (perm_parity(g) != 1)
        throw input_error("commutator_decompose: element is not in the commutator subgroup");

    Perm id = identity_perm(n);
    if (g == id) return {id, id};

    // [h,k] = g  <=>  k^{-1} h k = h g, so h must be conjugate to h g.
    Perm h = id;
    do {
        Perm hg = compose(h, g);
        if (cycle_type(h) == cycle_type(hg)) {
            Perm k = id;
            do {
                if (compose(inverse(k), compose(h, k)) == hg) {
                    Perm witness_check = commutator(h, k);
                    if (witness_check != g)
                        throw input_error("commutator_decompose: witness failed verification");
                    return {h, k};
                }
            } while (std::next_permutation(k.begin(), k.end()));
        }
    } while (std::next_permutation(h.begin(), h.end()));
    throw input_error("commutator_decompose: search exhausted");
}

std::optional<std::pair<Perm, Perm>> commutator_decompose_in(const std::vector<Perm>& group,
                                                             const Perm& g) {
    for (const Perm& h : group)
        for (const Perm& k : group)
            if (commutator(h, k) == g) return std::make_pair(h, k);
    return std::nullopt;
}

namespace {

// word product: a then b, with walk semantics (earlier factors applied first)
Perm wmul(const Perm& a, const Perm& b) { return compose(b, a); }

} // namespace

PatchResult patch_cell(const SurfaceComplex& X, const NonAbCochain1& f,
                       std::optional<int> universal_vertex) {
    if (X.face_count() != 1) throw input_error("patch_cell: complex must have one face");
    if (f.values.size() != X.edges.size()) throw input_error("patch_cell: size mismatch");

    const std::vector<int>& walk = X.faces[0];
    int x = X.dart_tail(walk[0]);
    Perm g_walk = walk_product(f, walk, X);
    int n = (int)g_walk.size();
    Perm id = identity_perm(n);
    if (perm_parity(g_walk) != 1)
        throw input_error("patch_cell: walk product is not in the commutator subgroup");

    PatchResult out;
    out.base_vertex = x;
    out.walk_value = g_walk;

    SurfaceComplex c = X;
    NonAbCochain1 labels = f;
    int x1 = c.vertex_count, x2 = c.vertex_count + 1;
    int y1 = c.vertex_count + 2, y2 = c.vertex_count + 3;
    c.vertex_count += 4;
    c.rotation.resize((std::size_t)c.vertex_count);

    int E = c.edge_count();
    int a1 = E, a2 = E + 1, a3 = E + 2, b1 = E + 3, b2 = E + 4, b3 = E + 5;
    c.edges.push_back({x, x1});   // a1
    c.edges.push_back({x1, x2});  // a2
    c.edges.push_back({x2, x});   // a3
    c.edges.push_back({x, y1});   // b1
    c.edges.push_back({y1, y2});  // b2
    c.edges.push_back({y2, x});   // b3
    for (int i = 0; i < 6; ++i) labels.values.push_back(id);

    // splice the excursion x x1 x2 x y1 y2 x x2 x1 x y2 y1 x at the corner
    // between the walk's last and first darts
    int dlast = walk.back();
    auto& rot_x = c.rotation[(std::size_t)x];
    auto it = std::find(rot_x.begin(), rot_x.end(), dart_reverse(dlast));
    if (it == rot_x.end()) throw input_error("patch_cell: base corner not found");
    std::vector<int> inserted = {dart_fwd(a1), dart_rev(b3), dart_rev(a3), dart_fwd(b1)};
    rot_x.insert(it + 1, inserted.begin(), inserted.end());
    c.rotation[(std::size_t)x1] = {dart_rev(a1), dart_fwd(a2)};
    c.rotation[(std::size_t)x2] = {dart_fwd(a3), dart_rev(a2)};
    c.rotation[(std::size_t)y1] = {dart_rev(b1), dart_fwd(b2)};
    c.rotation[(std::size_t)y2] = {dart_fwd(b3), dart_rev(b2)};
    c.retrace();
    if (c.face_count() != 1) throw input_error("patch_cell: excursion splice broke the face");

    // the witness darts must stay in alternating cyclic order X Y X^-1 Y^-1
    // along the single face for the label equation below to be solvable
    auto witnesses_alternate = [&]() {
        const std::vector<int>& w = c.faces[0];
        std::vector<int> order;
        for (int d : w) {
            int e = dart_edge(d);
            if (e == a2 || e == b2) order.push_back(e);
        }
        return order.size() == 4 && order[0] != order[1] && order[1] != order[2] &&
               order[2] != order[3];
    };

    if (universal_vertex) {
        int u = *universal_vertex;
        if (u < 0 || u >= X.vertex_count) throw input_error("patch_cell: bad universal vertex");
        auto insert_after = [&](int vertex, int anchor, int dart) {
            auto& rot = c.rotation[(std::size_t)vertex];
            auto pos = std::find(rot.begin(), rot.end(), anchor);
            if (pos == rot.end()) throw input_error("patch_cell: hub anchor lost");
            rot.insert(pos + 1, dart);
        };
        // corner anchors of a vertex along a face walk, in walk order
        auto corners_of = [&](const std::vector<int>& w, int vertex) {
            std::vector<int> anchors;
            std::size_t m = w.size();
            for (std::size_t i = 0; i < m; ++i)
                if (c.dart_tail(w[i]) == vertex)
                    anchors.push_back(dart_reverse(w[(i + m - 1) % m]));
            return anchors;
        };

        // each pair joins two new vertices to u; corner choices are searched
        // in deterministic order until the complex keeps one face and the
        // witness darts keep alternating
        for (auto [p, q] : {std::pair<int, int>{x1, x2}, {y1, y2}}) {
            int ep = c.edge_count();
            c.edges.push_back({p, u});
            labels.values.push_back(id);

            std::vector<int> p_corners = corners_of(c.faces[0], p);
            std::vector<int> u_corners = corners_of(c.faces[0], u);
            auto base_rotation = c.rotation;
            bool accepted = false;
            for (int cp : p_corners) {
                for (int cu : u_corners) {
                    if (accepted) break;
                    c.rotation = base_rotation;
                    insert_after(p, cp, dart_fwd(ep));
                    insert_after(u, cu, dart_rev(ep));
                    c.retrace();
                    if (c.face_count() != 2) continue;
                    auto split_rotation = c.rotation;
                    auto split_faces = c.faces;

                    int eq = c.edge_count();
                    c.edges.push_back({q, u});
                    labels.values.push_back(id);
                    // q's corner and u's corner must land in different faces
                    for (int qf = 0; qf < 2 && !accepted; ++qf) {
                        std::vector<int> q_corners = corners_of(split_faces[(std::size_t)qf], q);
                        std::vector<int> u2_corners =
                            corners_of(split_faces[(std::size_t)(1 - qf)], u);
                        for (int cq : q_corners) {
                            for (int cu2 : u2_corners) {
                                c.rotation = split_rotation;
                                insert_after(q, cq, dart_fwd(eq));
                                insert_after(u, cu2, dart_rev(eq));
                                c.retrace();
                                if (c.face_count() == 1 && witnesses_alternate()) {
                                    accepted = true;
                                    break;
                                }
                            }
                            if (accepted) break;
                        }
                    }
                    if (!accepted) {
                        c.edges.pop_back();
                        labels.values.pop_back();
                    }
                }
                if (accepted) break;
            }
            if (!accepted)
                throw input_error("patch_cell: no hub insertion keeps the walk solvable");
        }
    }

    // Solve for the labels of (x1,x2) and (y1,y2) on the final walk. With
    // X on the first and Y on the second, the walk reads
    // C1 X C2 Y C3 X^-1 C4 Y^-1 C5 = 1; substituting X1 = X C2,
    // Y1 = Y C3 C2 and X2 = (C4 C3 C2)^-1 X1 turns this into the plain
    // commutator equation X2 Y1 X2^-1 Y1^-1 = (C4 C3 C2)^-1 (C5 C1)^-1.
    const std::vector<int>& final_walk = c.faces[0];
    int m = (int)final_walk.size();
    std::vector<int> pos_a, pos_b;
    for (int i = 0; i < m; ++i) {
        int e = dart_edge(final_walk[(std::size_t)i]);
        if (e == a2) pos_a.push_back(i);
        if (e == b2) pos_b.push_back(i);
    }
    if (pos_a.size() != 2 || pos_b.size() != 2)
        throw input_error("patch_cell: witness edges do not appear twice in the walk");
    // exactly one b2 dart strictly between the a2 darts, else no interleaving
    auto between = [&](int lo, int hi, int p) {
        return lo < hi ? (lo < p && p < hi) : (p > lo || p < hi);
    };
    int yb = -1;
    if (between(pos_a[0], pos_a[1], pos_b[0]) != between(pos_a[0], pos_a[1], pos_b[1]))
        yb = between(pos_a[0], pos_a[1], pos_b[0]) ? pos_b[0] : pos_b[1];
    if (yb < 0) throw input_error("patch_cell: witness edges fail to interleave");
    int xs = pos_a[0], xe = pos_a[1], ye = yb == pos_b[0] ? pos_b[1] : pos_b[0];

    // rebase at xs; in rotated coordinates the order is X C2 Y C3 X^-1 C4
    // Y^-1 C5 with C1 empty
    auto rotated = [&](int p) { return (p - xs + m) % m; };
    int ry = rotated(yb), rxe = rotated(xe), rye = rotated(ye);
    Perm C2 = id, C3 = id, C4 = id, C5 = id;
    for (int i = 1; i < m; ++i) {
        if (i == ry || i == rxe || i == rye) continue;
        int d = final_walk[(std::size_t)((xs + i) % m)];
        const Perm& g = labels.values[(std::size_t)dart_edge(d)];
        Perm step = dart_forward(d) ? g : inverse(g);
        if (i < ry) C2 = wmul(C2, step);
        else if (i < rxe) C3 = wmul(C3, step);
        else if (i < rye) C4 = wmul(C4, step);
        else C5 = wmul(C5, step);
    }

    Perm G1 = C5;  // C1 is empty after rebasing
    Perm D = wmul(C3, C2);
    Perm Ew = wmul(C4, D);
    Perm target = wmul(inverse(Ew), inverse(G1));
    auto [h, k] = commutator_decompose(target);
    out.commutator_h = h;
    out.commutator_k = k;
    // word commutator X2 Y1 X2^-1 Y1^-1 = target holds for X2 = k, Y1 = h
    Perm X2v = k, Y1v = h;
    Perm X1v = wmul(Ew, X2v);
    Perm Xv = wmul(X1v, inverse(C2));
    Perm Yv = wmul(Y1v, inverse(D));

    labels.values[(std::size_t)a2] =
        dart_forward(final_walk[(std::size_t)xs]) ? Xv : inverse(Xv);
    labels.values[(std::size_t)b2] =
        dart_forward(final_walk[(std::size_t)yb]) ? Yv : inverse(Yv);

    if (walk_product(labels, final_walk, c) != id)
        throw input_error("patch_cell: solved labels do not close the walk product");

    out.complex = std::move(c);
    out.labels = std::move(labels);
    return out;
}

NonAbCoholocResult coholoc_nonab_brute(const SurfaceComplex& X, const NonAbCochain1& f,
                                       const std::vector<Perm>& group, std::uint64_t budget) {
    if (!nonab_is_cocycle(f, X)) throw input_error("coholoc_nonab_brute: not a cocycle");
    if (group.empty()) throw input_error("coholoc_nonab_brute: empty group");
    int n = (int)group[0].size();
    Perm id = identity_perm(n);
    if (std::find(group.begin(), group.end(), id) == group.end())
        throw input_error("coholoc_nonab_brute: group does not contain the identity");
    for (const Perm& p : f.values)
        if (std::find(group.begin(), group.end(), p) == group.end())
            throw input_error("coholoc_nonab_brute: label outside the group");

    // roots fixed to the identity, one per component
    std::vector<int> parent(X.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : X.edges) parent[find(e.first)] = find(e.second);
    std::vector<char> is_root(X.vertex_count, 0);
    std::set<int> seen;
    for (int v = 0; v < X.vertex_count; ++v)
        if (seen.insert(find(v)).second) is_root[(std::size_t)v] = 1;
    std::vector<int> free_vertices;
    for (int v = 0; v < X.vertex_count; ++v)
        if (!is_root[(std::size_t)v]) free_vertices.push_back(v);

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free_vertices.size(); ++i) {
        if (total > budget / group.size())
            throw budget_error("coholoc_nonab_brute: |G|^(V-1) exceeds budget");
        total *= group.size();
    }

    std::vector<int> idx(free_vertices.size(), 0);
    NonAbCochain0 c{std::vector<Perm>((std::size_t)X.vertex_count, id)};
    long long best = -1;
    NonAbCochain0 witness = c;
    for (;;) {
        for (std::size_t i = 0; i < free_vertices.size(); ++i)
            c.values[(std::size_t)free_vertices[i]] = group[(std::size_t)idx[i]];
        long long s = 0;
        for (int e = 0; e < X.edge_count(); ++e) {
            auto [xv, yv] = X.edges[(std::size_t)e];
            Perm t = compose(inverse(c.values[(std::size_t)yv]),
                             compose(f.values[(std::size_t)e], c.values[(std::size_t)xv]));
            if (t != id) ++s;
        }
        if (best < 0 || s < best) {
            best = s;
            witness = c;
        }
        int i = (int)idx.size() - 1;
        for (; i >= 0; --i) {
            if (++idx[(std::size_t)i] < (int)group.size()) break;
            idx[(std::size_t)i] = 0;
        }
        if (i < 0) break;
    }
    return {best, witness};
}

bool principal_cover_check(const NonAbCochain1& transitions, const SurfaceComplex& X,
                           bool* used_general) {
    if (transitions.values.size() != X.edges.size())
        throw input_error("principal_cover_check: size mismatch");
    if (used_general) *used_general = false;
    if (transitions.values.empty()) return true;
    Perm id = identity_perm((int)transitions.values[0].size());
    for (const auto& face : X.faces) {
        if (face.size() == 3) {
            // pi_ij pi_jk = pi_ik along the triangle i -> j -> k -> i
            auto dart_label = [&](int d) {
                const Perm& g = transitions.values[(std::size_t)dart_edge(d)];
                return dart_forward(d) ? g : inverse(g);
            };
            Perm t_ij = dart_label(face[0]);
            Perm t_jk = dart_label(face[1]);
            Perm t_ik = inverse(dart_label(face[2]));
            if (compose(t_jk, t_ij) != t_ik) return false;
        } else {
            if (used_general) *used_general = true;
            if (walk_product(transitions, face, X) != id) return false;
        }
    }
    return true;
}

} // namespace ugtop
