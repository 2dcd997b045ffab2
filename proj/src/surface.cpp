#include "ugtop/surface.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

#include "ugtop/errors.hpp"

namespace ugtop {

std::vector<std::vector<int>> trace_faces(int vertex_count,
                                          const std::vector<std::pair<int, int>>& edges,
                                          const std::vector<std::vector<int>>& rotation) {
    int E = (int)edges.size();
    if ((int)rotation.size() != vertex_count)
        throw input_error("trace_faces: one rotation per vertex required");

    auto tail = [&](int d) { return dart_forward(d) ? edges[dart_edge(d)].first
                                                    : edges[dart_edge(d)].second; };
    auto head = [&](int d) { return dart_forward(d) ? edges[dart_edge(d)].second
                                                    : edges[dart_edge(d)].first; };

    // position of each dart in its tail's rotation
    std::vector<int> pos(2 * (std::size_t)E, -1);
    for (int v = 0; v < vertex_count; ++v) {
        for (int i = 0; i < (int)rotation[v].size(); ++i) {
            int d = rotation[v][i];
            if (d < 0 || d >= 2 * E) throw input_error("trace_faces: dart id out of range");
            if (tail(d) != v)
                throw input_error("trace_faces: rotation at vertex " + std::to_string(v) +
                                  " lists a dart not leaving it");
            if (pos[(std::size_t)d] != -1) throw input_error("trace_faces: dart listed twice");
            pos[(std::size_t)d] = i;
        }
    }
    for (int d = 0; d < 2 * E; ++d)
        if (pos[(std::size_t)d] == -1)
            throw input_error("trace_faces: dart missing from its rotation");

    auto successor = [&](int d) {
        int r = dart_reverse(d);
        int v = head(d);
        const auto& rot = rotation[v];
        return rot[(std::size_t)((pos[(std::size_t)r] + 1) % (int)rot.size())];
    };

    std::vector<char> used(2 * (std::size_t)E, 0);
    std::vector<std::vector<int>> faces;
    for (int d0 = 0; d0 < 2 * E; ++d0) {
        if (used[(std::size_t)d0]) continue;
        std::vector<int> walk;
        int d = d0;
        do {
            used[(std::size_t)d] = 1;
            walk.push_back(d);
            d = successor(d);
        } while (d != d0);
        faces.push_back(std::move(walk));
    }
    // orbits are discovered from their least dart in increasing order already
    return faces;
}

void SurfaceComplex::retrace() { faces = trace_faces(vertex_count, edges, rotation); }

void SurfaceComplex::validate() const {
    trace_faces(vertex_count, edges, rotation);  // throws on malformed rotation
    std::vector<int> count(2 * edges.size(), 0);
    std::size_t total = 0;
    for (const auto& f : faces) {
        for (int d : f) ++count[(std::size_t)d];
        total += f.size();
    }
    if (total != 2 * edges.size())
        throw input_error("SurfaceComplex: face walks do not cover darts exactly once");
    for (int c : count)
        if (c != 1) throw input_error("SurfaceComplex: dart coverage violated");
}

int SurfaceComplex::component_count() const {
    std::vector<int> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges) parent[find(e.first)] = find(e.second);
    int c = 0;
    for (int v = 0; v < vertex_count; ++v)
        if (find(v) == v) ++c;
    return c;
}

int SurfaceComplex::euler_characteristic() const {
    return vertex_count - (int)edges.size() + (int)faces.size();
}

int SurfaceComplex::genus() const {
    // per component: chi_c = V_c - E_c + F_c = 2 - 2 g_c
    std::vector<int> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges) parent[find(e.first)] = find(e.second);
    std::vector<int> chi(vertex_count, 0);
    for (int v = 0; v < vertex_count; ++v) chi[find(v)] += 1;
    for (const auto& e : edges) chi[find(e.first)] -= 1;
    for (const auto& f : faces) {
        if (f.empty()) continue;
        int v = dart_forward(f[0]) ? edges[dart_edge(f[0])].first : edges[dart_edge(f[0])].second;
        chi[find(v)] += 1;
    }
    int g = 0;
    for (int v = 0; v < vertex_count; ++v) {
        if (find(v) != v) continue;
        int c = chi[v];
        if (c > 2 || (c % 2) != 0)
            throw input_error("genus: component Euler characteristic " + std::to_string(c) +
                              " is not of the form 2 - 2g");
        g += (2 - c) / 2;
    }
    return g;
}

std::vector<int> SurfaceComplex::face_of_dart() const {
    std::vector<int> fo(2 * edges.size(), -1);
    for (int f = 0; f < (int)faces.size(); ++f)
        for (int d : faces[(std::size_t)f]) fo[(std::size_t)d] = f;
    return fo;
}

SurfaceComplex make_complex(int vertex_count, std::vector<std::pair<int, int>> edges,
                            std::vector<std::vector<int>> rotation) {
    SurfaceComplex c;
    c.vertex_count = vertex_count;
    c.edges = std::move(edges);
    c.rotation = std::move(rotation);
    c.retrace();
    return c;
}

namespace {

// ----- Xuong certificate search ------------------------------------------

struct DSU {
    std::vector<int> parent;
    explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

bool connected_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 0) return true;
    DSU dsu(n);
    for (auto [u, v] : edges) dsu.unite(u, v);
    int r = dsu.find(0);
    for (int v = 1; v < n; ++v)
        if (dsu.find(v) != r) return false;
    return true;
}

} // namespace

std::optional<std::vector<std::pair<int, int>>> pair_adjacent_edges(
    int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& edge_ids) {
    if (edge_ids.empty()) return std::vector<std::pair<int, int>>{};
    if (edge_ids.size() % 2 != 0) return std::nullopt;

    // DFS tree over the component's vertices using its edges
    std::vector<std::vector<std::pair<int, int>>> inc(n);  // (edge id, other end)
    for (int id : edge_ids) {
        auto [u, v] = edges[(std::size_t)id];
        inc[u].push_back({id, v});
        if (u != v) inc[v].push_back({id, u});
    }
    int root = edges[(std::size_t)edge_ids[0]].first;

    std::vector<int> parent_vertex(n, -2), parent_edge(n, -1), order;
    std::vector<char> edge_in_tree(edges.size(), 0);
    parent_vertex[root] = -1;
    std::deque<int> stack{root};
    std::vector<char> visited(n, 0);
    visited[root] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (auto [id, w] : inc[u]) {
            if (!visited[w]) {
                visited[w] = 1;
                parent_vertex[w] = u;
                parent_edge[w] = id;
                edge_in_tree[(std::size_t)id] = 1;
                stack.push_back(w);
            }
        }
    }

    // Assign each non-tree edge to its endpoint that appears later in DFS
    // preorder discovery (the deeper one); loops go to their own vertex.
    std::vector<int> disc(n, -1);
    for (int i = 0; i < (int)order.size(); ++i) disc[order[(std::size_t)i]] = i;
    std::vector<std::vector<int>> bucket(n);
    for (int id : edge_ids) {
        if (edge_in_tree[(std::size_t)id]) continue;
        auto [u, v] = edges[(std::size_t)id];
        int owner = (disc[u] >= disc[v]) ? u : v;
        bucket[owner].push_back(id);
    }

    std::vector<std::pair<int, int>> pairs;
    std::vector<char> paired(edges.size(), 0);
    // children processed before parents
    for (int i = (int)order.size() - 1; i >= 0; --i) {
        int v = order[(std::size_t)i];
        std::vector<int> pending = bucket[v];
        // tree edges to children that came back unpaired
        for (auto [id, w] : inc[v]) {
            if (!edge_in_tree[(std::size_t)id]) continue;
            if (parent_vertex[w] == v && parent_edge[w] == id && !paired[(std::size_t)id])
                pending.push_back(id);
        }
        std::sort(pending.begin(), pending.end());
        pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
        std::size_t m = pending.size();
        for (std::size_t j = 0; j + 1 < m; j += 2) {
            pairs.push_back({pending[j], pending[j + 1]});
            paired[(std::size_t)pending[j]] = 1;
            paired[(std::size_t)pending[j + 1]] = 1;
        }
        if (m % 2 == 1) {
            int leftover = pending[m - 1];
            if (parent_vertex[v] < 0) return std::nullopt;  // odd total, cannot happen
            int pe = parent_edge[v];
            pairs.push_back({leftover, pe});
            paired[(std::size_t)leftover] = 1;
            paired[(std::size_t)pe] = 1;
        }
    }
    for (int id : edge_ids)
        if (!paired[(std::size_t)id]) return std::nullopt;
    return pairs;
}

namespace {

// Certificate attempt for a fixed spanning tree (given as edge ids).
std::optional<XuongCertificate> try_tree(int n, const std::vector<std::pair<int, int>>& edges,
                                         const std::vector<int>& tree) {
    std::vector<char> in_tree(edges.size(), 0);
    for (int id : tree) in_tree[(std::size_t)id] = 1;

    // co-tree components
    DSU dsu(n);
    for (int e = 0; e < (int)edges.size(); ++e)
        if (!in_tree[(std::size_t)e]) dsu.unite(edges[(std::size_t)e].first,
                                                edges[(std::size_t)e].second);
    std::vector<std::vector<int>> comp_edges(n);
    for (int e = 0; e < (int)edges.size(); ++e)
        if (!in_tree[(std::size_t)e]) comp_edges[dsu.find(edges[(std::size_t)e].first)].push_back(e);

    XuongCertificate cert;
    cert.tree_edges = tree;
    for (int r = 0; r < n; ++r) {
        if (comp_edges[r].empty()) continue;
        if (comp_edges[r].size() % 2 != 0) return std::nullopt;
        auto pairs = pair_adjacent_edges(n, edges, comp_edges[r]);
        if (!pairs) return std::nullopt;
        for (auto& p : *pairs) cert.pairing.push_back(p);
    }
    return cert;
}

std::optional<std::vector<int>> bfs_tree(int n, const std::vector<std::pair<int, int>>& edges,
                                         int root) {
    std::vector<std::vector<std::pair<int, int>>> inc(n);
    for (int e = 0; e < (int)edges.size(); ++e) {
        auto [u, v] = edges[(std::size_t)e];
        inc[u].push_back({e, v});
        if (u != v) inc[v].push_back({e, u});
    }
    std::vector<char> visited(n, 0);
    std::vector<int> tree;
    std::deque<int> queue{root};
    visited[root] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (auto [e, w] : inc[u]) {
            if (!visited[w]) {
                visited[w] = 1;
                tree.push_back(e);
                queue.push_back(w);
            }
        }
    }
    if ((int)tree.size() != n - 1) return std::nullopt;
    return tree;
}

// star tree at u: one least-id edge from u to each other vertex
std::optional<std::vector<int>> star_tree(int n, const std::vector<std::pair<int, int>>& edges,
                                          int u) {
    std::vector<int> pick(n, -1);
    for (int e = 0; e < (int)edges.size(); ++e) {
        auto [a, b] = edges[(std::size_t)e];
        int other = -1;
        if (a == u && b != u) other = b;
        else if (b == u && a != u) other = a;
        if (other >= 0 && pick[other] == -1) pick[other] = e;
    }
    std::vector<int> tree;
    for (int v = 0; v < n; ++v) {
        if (v == u) continue;
        if (pick[v] == -1) return std::nullopt;
        tree.push_back(pick[v]);
    }
    return tree;
}

void enumerate_spanning_trees(int n, const std::vector<std::pair<int, int>>& edges,
                              std::vector<int>& chosen, std::size_t from, DSU dsu,
                              const std::function<bool(const std::vector<int>&)>& visit,
                              bool& done) {
    if (done) return;
    if ((int)chosen.size() == n - 1) {
        if (visit(chosen)) done = true;
        return;
    }
    if (from >= edges.size()) return;
    // include edges[from] if it joins two components
    auto [u, v] = edges[from];
    if (dsu.find(u) != dsu.find(v)) {
        DSU next = dsu;
        next.unite(u, v);
        chosen.push_back((int)from);
        enumerate_spanning_trees(n, edges, chosen, from + 1, next, visit, done);
        chosen.pop_back();
        if (done) return;
    }
    // enough edges left to finish?
    if (edges.size() - from - 1 + chosen.size() >= (std::size_t)(n - 1))
        enumerate_spanning_trees(n, edges, chosen, from + 1, dsu, visit, done);
}

} // namespace

std::optional<XuongCertificate> xuong_certificate(int vertex_count,
                                                  const std::vector<std::pair<int, int>>& edges) {
    if (!connected_graph(vertex_count, edges))
        throw input_error("xuong_certificate: graph must be connected");
    if (vertex_count == 0) return std::nullopt;

    std::vector<int> degree(vertex_count, 0);
    for (auto [u, v] : edges) {
        ++degree[u];
        ++degree[v];
    }
    int max_deg = *std::max_element(degree.begin(), degree.end());

    // star trees of max-degree vertices first
    for (int v = 0; v < vertex_count; ++v) {
        if (degree[v] != max_deg) continue;
        if (auto tree = star_tree(vertex_count, edges, v))
            if (auto cert = try_tree(vertex_count, edges, *tree)) return cert;
    }
    // BFS trees from each vertex
    for (int v = 0; v < vertex_count; ++v) {
        if (auto tree = bfs_tree(vertex_count, edges, v))
            if (auto cert = try_tree(vertex_count, edges, *tree)) return cert;
    }
    // small graphs: exhaustive over all spanning trees
    if (edges.size() <= 16) {
        std::optional<XuongCertificate> found;
        std::vector<int> chosen;
        bool done = false;
        enumerate_spanning_trees(vertex_count, edges, chosen, 0, DSU(vertex_count),
                                 [&](const std::vector<int>& tree) {
                                     if (auto cert = try_tree(vertex_count, edges, tree)) {
                                         found = cert;
                                         return true;
                                     }
                                     return false;
                                 },
                                 done);
        return found;
    }
    return std::nullopt;
}

namespace {

// One insertion slot in a rotation list: insert right after `anchor`, or at
// the end when anchor == -1 (empty rotation).
struct Slot {
    int vertex = -1;
    int anchor = -1;
};

void insert_dart(std::vector<std::vector<int>>& rotation, const Slot& slot, int dart) {
    auto& rot = rotation[(std::size_t)slot.vertex];
    if (slot.anchor == -1) {
        rot.push_back(dart);
        return;
    }
    auto it = std::find(rot.begin(), rot.end(), slot.anchor);
    if (it == rot.end()) throw input_error("one_face_embed: internal slot anchor lost");
    rot.insert(it + 1, dart);
}

// Corners of a face walk: corner i sits at tail(walk[i]) in the rotation gap
// right after reverse(walk[i-1]).
std::vector<Slot> face_corners(const std::vector<int>& walk,
                               const std::vector<std::pair<int, int>>& edges) {
    std::vector<Slot> corners;
    std::size_t m = walk.size();
    for (std::size_t i = 0; i < m; ++i) {
        int prev = walk[(i + m - 1) % m];
        int cur = walk[i];
        int v = dart_forward(cur) ? edges[dart_edge(cur)].first : edges[dart_edge(cur)].second;
        corners.push_back({v, dart_reverse(prev)});
    }
    return corners;
}

} // namespace

SurfaceComplex one_face_embed(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                              const XuongCertificate& cert) {
    if (!connected_graph(vertex_count, edges))
        throw input_error("one_face_embed: graph must be connected");

    // check the certificate shape
    std::vector<char> in_tree(edges.size(), 0);
    DSU dsu(vertex_count);
    for (int id : cert.tree_edges) {
        if (id < 0 || id >= (int)edges.size())
            throw input_error("one_face_embed: tree edge id out of range");
        if (in_tree[(std::size_t)id]) throw input_error("one_face_embed: repeated tree edge");
        in_tree[(std::size_t)id] = 1;
        if (!dsu.unite(edges[(std::size_t)id].first, edges[(std::size_t)id].second))
            throw input_error("one_face_embed: tree edges contain a cycle");
    }
    if ((int)cert.tree_edges.size() != vertex_count - 1)
        throw input_error("one_face_embed: tree does not span");
    std::vector<char> covered(edges.size(), 0);
    for (auto [a, b] : cert.pairing) {
        for (int id : {a, b}) {
            if (id < 0 || id >= (int)edges.size() || in_tree[(std::size_t)id] ||
                covered[(std::size_t)id])
                throw input_error("one_face_embed: pairing does not partition the co-tree");
            covered[(std::size_t)id] = 1;
        }
        auto& ea = edges[(std::size_t)a];
        auto& eb = edges[(std::size_t)b];
        if (ea.first != eb.first && ea.first != eb.second && ea.second != eb.first &&
            ea.second != eb.second)
            throw input_error("one_face_embed: paired edges do not share a vertex");
    }
    for (int e = 0; e < (int)edges.size(); ++e)
        if (!in_tree[(std::size_t)e] && !covered[(std::size_t)e])
            throw input_error("one_face_embed: pairing does not cover the co-tree");

    // embed the tree, any rotation gives one face; darts sorted by edge id
    std::vector<std::vector<int>> rotation(vertex_count);
    for (int id : cert.tree_edges) {
        rotation[edges[(std::size_t)id].first].push_back(dart_fwd(id));
        rotation[edges[(std::size_t)id].second].push_back(dart_rev(id));
    }
    for (auto& rot : rotation) std::sort(rot.begin(), rot.end());

    // active edges grow as pairs are inserted; retrace after each step
    std::vector<int> active = cert.tree_edges;
    auto trace_active = [&]() {
        std::vector<std::pair<int, int>> sub;
        std::vector<int> back(edges.size(), -1);
        for (int id : active) {
            back[(std::size_t)id] = (int)sub.size();
            sub.push_back(edges[(std::size_t)id]);
        }
        // rotations refer to global dart ids; remap to the subgraph
        std::vector<std::vector<int>> rot2(vertex_count);
        for (int v = 0; v < vertex_count; ++v)
            for (int d : rotation[(std::size_t)v])
                rot2[(std::size_t)v].push_back(2 * back[(std::size_t)dart_edge(d)] + (d & 1));
        auto faces = trace_faces(vertex_count, sub, rot2);
        // map darts back to global ids
        std::vector<int> fwd((std::size_t)sub.size(), 0);
        for (int id : active) fwd[(std::size_t)back[(std::size_t)id]] = id;
        for (auto& f : faces)
            for (int& d : f) d = 2 * fwd[(std::size_t)dart_edge(d)] + (d & 1);
        return faces;
    };

    {
        auto faces = trace_active();
        if (vertex_count > 1 && faces.size() != 1)
            throw input_error("one_face_embed: tree embedding did not trace one face");
    }

    for (auto [eA, eB] : cert.pairing) {
        // first edge: both darts at the first corners of its endpoints
        auto faces = trace_active();
        std::vector<Slot> corners;
        if (!faces.empty()) corners = face_corners(faces[0], edges);

        auto [a, b] = edges[(std::size_t)eA];
        Slot slot_a, slot_b;
        if (corners.empty()) {
            // single vertex, no edges yet
            slot_a = {a, -1};
            slot_b = {b, -1};
        } else if (a == b) {
            // loop: two distinct corners when available, else stacked
            int found = 0;
            for (const auto& c : corners) {
                if (c.vertex != a) continue;
                if (found == 0) slot_a = c;
                else if (found == 1) slot_b = c;
                ++found;
                if (found == 2) break;
            }
            if (found == 0) throw input_error("one_face_embed: endpoint missing from walk");
            if (found == 1) slot_b = Slot{a, dart_fwd(eA)};  // right after the first dart
        } else {
            slot_a.vertex = slot_b.vertex = -1;
            for (const auto& c : corners) {
                if (c.vertex == a && slot_a.vertex == -1) slot_a = c;
                if (c.vertex == b && slot_b.vertex == -1) slot_b = c;
            }
            if (slot_a.vertex == -1 || slot_b.vertex == -1)
                throw input_error("one_face_embed: endpoint missing from walk");
        }
        insert_dart(rotation, slot_a, dart_fwd(eA));
        insert_dart(rotation, slot_b, dart_rev(eA));
        active.push_back(eA);

        // second edge: endpoints in the two different faces
        faces = trace_active();
        if (faces.size() != 2)
            throw input_error("one_face_embed: expected two faces after first insertion");
        auto [c, d] = edges[(std::size_t)eB];
        std::vector<Slot> corners0 = face_corners(faces[0], edges);
        std::vector<Slot> corners1 = face_corners(faces[1], edges);
        Slot slot_c{-1, -1}, slot_d{-1, -1};
        bool placed = false;
        for (int which = 0; which < 2 && !placed; ++which) {
            const auto& cs = which == 0 ? corners0 : corners1;
            const auto& ds = which == 0 ? corners1 : corners0;
            for (const auto& sc : cs) {
                if (sc.vertex != c) continue;
                for (const auto& sd : ds) {
                    if (sd.vertex != d) continue;
                    slot_c = sc;
                    slot_d = sd;
                    placed = true;
                    break;
                }
                if (placed) break;
            }
        }
        if (!placed)
            throw input_error("one_face_embed: no interleaving positions for certified pair");
        insert_dart(rotation, slot_c, dart_fwd(eB));
        insert_dart(rotation, slot_d, dart_rev(eB));
        active.push_back(eB);

        faces = trace_active();
        if (faces.size() != 1)
            throw input_error("one_face_embed: pair insertion did not restore one face");
    }

    SurfaceComplex out = make_complex(vertex_count, edges, rotation);
    if (out.face_count() != 1 && !(edges.empty() && vertex_count <= 1))
        throw input_error("one_face_embed: final complex does not have one face");
    return out;
}

SurfaceComplex dual_complex(const SurfaceComplex& c) {
    if (c.component_count() > 1) throw input_error("dual_complex: complex must be connected");
    auto fo = c.face_of_dart();
    SurfaceComplex dual;
    dual.vertex_count = c.face_count();
    dual.edges.resize(c.edges.size());
    for (int e = 0; e < (int)c.edges.size(); ++e)
        dual.edges[(std::size_t)e] = {fo[(std::size_t)dart_fwd(e)], fo[(std::size_t)dart_rev(e)]};
    // rotation at a dual vertex follows the primal face walk: the dart of
    // primal dart d leaves face(d) and is +e exactly when d is +e
    dual.rotation.resize(dual.vertex_count);
    for (int f = 0; f < c.face_count(); ++f)
        for (int d : c.faces[(std::size_t)f]) dual.rotation[(std::size_t)f].push_back(d);
    dual.retrace();
    return dual;
}

} // namespace ugtop
