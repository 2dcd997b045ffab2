#include "ugtop/surface_reduction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "ugtop/errors.hpp"

namespace ugtop {

const char* edge_class_name(EdgeClass c) {
    switch (c) {
        case EdgeClass::Original: return "original";
        case EdgeClass::Connector: return "connector";
        case EdgeClass::ParityLeaf: return "leaf";
        case EdgeClass::Star: return "star";
        case EdgeClass::SpokeS: return "S";
        case EdgeClass::CycleC: return "C";
        case EdgeClass::LinkL: return "L";
    }
    return "?";
}

std::optional<EdgeClass> edge_class_from_name(const std::string& s) {
    if (s == "original") return EdgeClass::Original;
    if (s == "connector") return EdgeClass::Connector;
    if (s == "leaf") return EdgeClass::ParityLeaf;
    if (s == "star") return EdgeClass::Star;
    if (s == "S") return EdgeClass::SpokeS;
    if (s == "C") return EdgeClass::CycleC;
    if (s == "L") return EdgeClass::LinkL;
    return std::nullopt;
}

Max2LinInstance SurfaceInstance::instance() const {
    return cocycle_to_maxlin(complex, cocycle);
}

namespace {

struct Augmented {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    Provenance prov;
    XuongCertificate cert;
    std::vector<int> old_to_new;  // -1 for dropped isolated vertices
};

// Shared graph augmentation: drop isolated vertices, connect components,
// fix edge parity with a leaf, add the universal vertex, and certify with
// its star tree.
Augmented augment(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (edges.empty()) throw input_error("graph_to_one_face: instance has no constraints");

    Augmented out;
    std::vector<char> has_edge(vertex_count, 0);
    for (auto [u, v] : edges) {
        has_edge[(std::size_t)u] = 1;
        has_edge[(std::size_t)v] = 1;
    }
    out.old_to_new.assign((std::size_t)vertex_count, -1);
    int n = 0;
    for (int v = 0; v < vertex_count; ++v)
        if (has_edge[(std::size_t)v]) out.old_to_new[(std::size_t)v] = n++;
    out.prov.dropped_isolated = (n != vertex_count);

    for (auto [u, v] : edges) {
        out.edges.push_back({out.old_to_new[(std::size_t)u], out.old_to_new[(std::size_t)v]});
        out.prov.edge_class.push_back(EdgeClass::Original);
    }
    out.vertex_count = n;
    out.prov.vertex_class.assign((std::size_t)n, VertexClass::Original);

    // connect components to the least vertex of the first one
    {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto [u, v] : out.edges) parent[find(u)] = find(v);
        std::vector<int> root_of;
        std::vector<char> seen(n, 0);
        for (int v = 0; v < n; ++v) {
            int r = find(v);
            if (!seen[(std::size_t)r]) {
                seen[(std::size_t)r] = 1;
                root_of.push_back(v);  // least vertex per component, ascending
            }
        }
        for (std::size_t c = 1; c < root_of.size(); ++c) {
            out.edges.push_back({root_of[0], root_of[c]});
            out.prov.edge_class.push_back(EdgeClass::Connector);
        }
    }

    // odd edge count: zero-shift leaf at vertex 0
    if (out.edges.size() % 2 != 0) {
        int leaf = out.vertex_count++;
        out.prov.vertex_class.push_back(VertexClass::Leaf);
        out.edges.push_back({0, leaf});
        out.prov.edge_class.push_back(EdgeClass::ParityLeaf);
    }

    // universal vertex
    int u = out.vertex_count++;
    out.prov.vertex_class.push_back(VertexClass::Universal);
    out.prov.universal_vertex = u;
    std::vector<int> star;
    for (int v = 0; v < u; ++v) {
        star.push_back((int)out.edges.size());
        out.edges.push_back({u, v});
        out.prov.edge_class.push_back(EdgeClass::Star);
    }

    // co-tree of the star tree is connected with evenly many edges
    out.cert.tree_edges = star;
    std::vector<int> cotree;
    for (int e = 0; e < (int)out.edges.size(); ++e)
        if (out.prov.edge_class[(std::size_t)e] != EdgeClass::Star) cotree.push_back(e);
    if (cotree.size() % 2 != 0)
        throw input_error("graph_to_one_face: internal parity failure");
    auto pairs = pair_adjacent_edges(out.vertex_count, out.edges, cotree);
    if (!pairs) throw input_error("graph_to_one_face: co-tree pairing failed");
    out.cert.pairing = *pairs;
    return out;
}

} // namespace

SurfaceInstance graph_to_one_face(const Max2LinInstance& inst) {
    inst.validate();
    Augmented aug = augment(inst.vertex_count, [&] {
        std::vector<std::pair<int, int>> edges;
        for (const auto& c : inst.constraints) edges.push_back({c.u, c.v});
        return edges;
    }());

    SurfaceInstance out;
    out.complex = one_face_embed(aug.vertex_count, aug.edges, aug.cert);
    out.prov = aug.prov;
    out.cocycle.k = inst.k;
    out.cocycle.values.assign(aug.edges.size(), 0);
    for (std::size_t e = 0; e < inst.constraints.size(); ++e)
        out.cocycle.values[e] = inst.constraints[e].c;
    return out;
}

CoverSurfaceInstance graph_to_one_face_ug(const UGInstance& inst) {
    inst.validate();
    Augmented aug = augment(inst.vertex_count, [&] {
        std::vector<std::pair<int, int>> edges;
        for (const auto& c : inst.constraints) edges.push_back({c.u, c.v});
        return edges;
    }());

    CoverSurfaceInstance out;
    out.complex = one_face_embed(aug.vertex_count, aug.edges, aug.cert);
    out.prov = aug.prov;
    out.labels.values.assign(aug.edges.size(), identity_perm(inst.k));
    for (std::size_t e = 0; e < inst.constraints.size(); ++e)
        out.labels.values[e] = inst.constraints[e].pi;
    return out;
}

SurfaceInstance triangulate_face(const SurfaceInstance& si) {
    const SurfaceComplex& X = si.complex;
    if (X.face_count() != 1) throw input_error("triangulate_face: complex must have one face");
    if ((int)si.cocycle.values.size() != X.edge_count())
        throw input_error("triangulate_face: cocycle size mismatch");
    int k = si.cocycle.k;

    const std::vector<int>& walk = X.faces[0];
    int two_e = (int)walk.size();
    if (two_e != 2 * X.edge_count())
        throw input_error("triangulate_face: face walk does not use each edge twice");
    int e_in = X.edge_count();
    int v_in = X.vertex_count;

    SurfaceInstance out;
    out.prov = si.prov;
    SurfaceComplex& c = out.complex;
    c.vertex_count = v_in + two_e + 1;
    int hub = v_in + two_e;
    out.prov.vertex_class.resize((std::size_t)c.vertex_count, VertexClass::Gadget);
    out.prov.vertex_class[(std::size_t)hub] = VertexClass::Hub;

    c.edges = X.edges;
    out.prov.edge_class.resize((std::size_t)e_in);  // keep incoming classes

    // edge ids: L left = e_in + 2i, L right = e_in + 2i + 1, C = e_in + 4e + i,
    // S = e_in + 6e + i for walk position i (2e positions)
    auto gadget = [&](int i) { return v_in + i; };
    int l_base = e_in, c_base = e_in + 2 * two_e, s_base = e_in + 3 * two_e;
    std::vector<int> tails(two_e), heads(two_e);
    for (int i = 0; i < two_e; ++i) {
        tails[(std::size_t)i] = X.dart_tail(walk[(std::size_t)i]);
        heads[(std::size_t)i] = X.dart_head(walk[(std::size_t)i]);
    }
    for (int i = 0; i < two_e; ++i) {
        c.edges.push_back({gadget(i), tails[(std::size_t)i]});  // e_{i,l}
        c.edges.push_back({gadget(i), heads[(std::size_t)i]});  // e_{i,r}
        out.prov.edge_class.push_back(EdgeClass::LinkL);
        out.prov.edge_class.push_back(EdgeClass::LinkL);
    }
    for (int i = 0; i < two_e; ++i) {
        c.edges.push_back({gadget(i), gadget((i + 1) % two_e)});  // c_i
        out.prov.edge_class.push_back(EdgeClass::CycleC);
    }
    for (int i = 0; i < two_e; ++i) {
        c.edges.push_back({hub, gadget(i)});  // s_i
        out.prov.edge_class.push_back(EdgeClass::SpokeS);
    }

    // rotations: at an original vertex, each face corner between walk
    // positions i-1 and i receives the darts toward v_{i-1} and v_i
    c.rotation.assign((std::size_t)c.vertex_count, {});
    for (int v = 0; v < v_in; ++v) c.rotation[(std::size_t)v] = X.rotation[(std::size_t)v];
    for (int i = 0; i < two_e; ++i) {
        int prev = (i + two_e - 1) % two_e;
        int v = tails[(std::size_t)i];  // head of walk[prev] as well
        auto& rot = c.rotation[(std::size_t)v];
        auto it = std::find(rot.begin(), rot.end(), dart_reverse(walk[(std::size_t)prev]));
        if (it == rot.end()) throw input_error("triangulate_face: corner anchor missing");
        // after reverse(walk[prev]): dart to v_prev (right link of prev),
        // then dart to v_i (left link of i)
        std::vector<int> ins = {dart_rev(l_base + 2 * prev + 1), dart_rev(l_base + 2 * i)};
        rot.insert(it + 1, ins.begin(), ins.end());
    }
    for (int i = 0; i < two_e; ++i) {
        int next = (i + 1) % two_e, prev = (i + two_e - 1) % two_e;
        c.rotation[(std::size_t)gadget(i)] = {
            dart_rev(s_base + i),            // to hub
            dart_fwd(c_base + i),            // to v_{i+1}
            dart_fwd(l_base + 2 * i + 1),    // to head of edge i
            dart_fwd(l_base + 2 * i),        // to tail of edge i
            dart_rev(c_base + prev),         // to v_{i-1}
        };
        (void)next;
    }
    for (int i = two_e - 1; i >= 0; --i)
        c.rotation[(std::size_t)hub].push_back(dart_fwd(s_base + i));

    c.retrace();
    if (c.face_count() != 6 * e_in)
        throw input_error("triangulate_face: traced " + std::to_string(c.face_count()) +
                          " faces, expected " + std::to_string(6 * e_in));
    for (const auto& f : c.faces)
        if (f.size() != 3) throw input_error("triangulate_face: non-triangular face traced");

    // shifts: left links and spoke 0 are zero, the rest deduced so each
    // triangle's signed sum closes; order L, then C, then S around the walk
    out.cocycle.k = k;
    out.cocycle.values.assign(c.edges.size(), 0);
    for (int e = 0; e < e_in; ++e) out.cocycle.values[(std::size_t)e] = si.cocycle.values[(std::size_t)e];

    auto edge_shift_signed = [&](int dart) {
        int s = out.cocycle.values[(std::size_t)dart_edge(dart)];
        return dart_forward(dart) ? s : (k - s) % k;
    };
    // T_edge_i: v_i -> tail_i (l), tail_i -> head_i (walk dart), head_i -> v_i (r reversed)
    for (int i = 0; i < two_e; ++i) {
        int sum = (edge_shift_signed(dart_fwd(l_base + 2 * i)) +
                   edge_shift_signed(walk[(std::size_t)i])) % k;
        // + shift(r reversed) = 0  =>  shift(r, reversed) = -sum, stored fwd = sum
        out.cocycle.values[(std::size_t)(l_base + 2 * i + 1)] = sum % k;
    }
    // T_link_i: v_i -> head_i (r), head_i -> v_{i+1} (l_{i+1} reversed), v_{i+1} -> v_i (c_i reversed)
    for (int i = 0; i < two_e; ++i) {
        int next = (i + 1) % two_e;
        int sum = (edge_shift_signed(dart_fwd(l_base + 2 * i + 1)) +
                   edge_shift_signed(dart_rev(l_base + 2 * next))) % k;
        out.cocycle.values[(std::size_t)(c_base + i)] = sum % k;
    }
    // T_hub_i: hub -> v_i (s_i), v_i -> v_{i+1} (c_i), v_{i+1} -> hub (s_{i+1} reversed)
    out.cocycle.values[(std::size_t)(s_base + 0)] = 0;
    for (int i = 0; i + 1 < two_e; ++i) {
        int sum = (edge_shift_signed(dart_fwd(s_base + i)) +
                   edge_shift_signed(dart_fwd(c_base + i))) % k;
        out.cocycle.values[(std::size_t)(s_base + i + 1)] = sum % k;
    }
    // wheel closure at the last hub triangle, asserted
    {
        int i = two_e - 1;
        int sum = (edge_shift_signed(dart_fwd(s_base + i)) +
                   edge_shift_signed(dart_fwd(c_base + i)) +
                   edge_shift_signed(dart_rev(s_base + 0))) % k;
        if (sum % k != 0)
            throw input_error("triangulate_face: spoke deduction did not close around the wheel");
    }
    if (!is_cocycle(out.cocycle, c))
        throw input_error("triangulate_face: deduced shifts fail the cocycle test");
    return out;
}

GapReport gap_bounds_check(const SurfaceInstance& si_in, const SurfaceInstance& si_out,
                           std::uint64_t budget) {
    Max2LinInstance in = si_in.instance();
    Max2LinInstance outi = si_out.instance();
    BruteOptions opt;
    opt.budget = budget;
    OptResult rin = opt_brute(in, opt);
    OptResult rout = opt_brute(outi, opt);

    GapReport rep;
    rep.best_in = rin.best_count;
    rep.best_out = rout.best_count;
    rep.rho_in = Rat(rin.best_count, (long long)in.constraints.size());
    rep.rho_out = Rat(rout.best_count, (long long)outi.constraints.size());
    rep.lower = (Rat(2) + Rat(5) * rep.rho_in) / Rat(9);
    rep.upper = (Rat(2) + rep.rho_in) / Rat(3);
    rep.ok = rep.lower <= rep.rho_out && rep.rho_out <= rep.upper;
    return rep;
}

} // namespace ugtop
