#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ugtop/errors.hpp"
#include "ugtop/rng.hpp"
#include "ugtop/surface.hpp"

using namespace ugtop;

namespace {

// planar K4: vertex 0 inside the outer triangle 1, 2, 3
SurfaceComplex tetrahedron() {
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
    };
    // counterclockwise rotations from planar coordinates
    std::vector<std::vector<int>> rotation = {
        {dart_fwd(2), dart_fwd(0), dart_fwd(1)},  // at 0: 3, 1, 2
        {dart_fwd(3), dart_rev(0), dart_fwd(4)},  // at 1: 2, 0, 3
        {dart_fwd(5), dart_rev(1), dart_rev(3)},  // at 2: 1, 0, 3
        {dart_rev(4), dart_rev(2), dart_rev(5)},  // at 3: 1, 0, 2
    };
    return make_complex(4, edges, rotation);
}

// one-vertex torus: two loops with interleaved rotation, face a b a' b'
SurfaceComplex torus() {
    std::vector<std::pair<int, int>> edges = {{0, 0}, {0, 0}};
    std::vector<std::vector<int>> rotation = {
        {dart_fwd(0), dart_rev(1), dart_rev(0), dart_fwd(1)}};
    return make_complex(1, edges, rotation);
}

std::vector<std::pair<int, int>> theta_edges() { return {{0, 1}, {0, 1}, {0, 1}}; }

std::vector<std::pair<int, int>> k5_edges() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges.push_back({u, v});
    return edges;
}

std::vector<std::pair<int, int>> random_connected_graph(SplitMix64& rng, int n, int extra) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({(int)rng.below((std::uint64_t)v), v});
    for (int i = 0; i < extra; ++i) {
        int u = (int)rng.below((std::uint64_t)n);
        int v = (int)rng.below((std::uint64_t)n);
        if (u == v) continue;
        edges.push_back({u, v});
    }
    return edges;
}

// independent tree check for the exhaustive comparison
bool tree_spans(int n, const std::vector<std::pair<int, int>>& edges,
                const std::vector<int>& subset) {
    if ((int)subset.size() != n - 1) return false;
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[(std::size_t)v] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[(std::size_t)x] != x) x = parent[(std::size_t)x];
        return x;
    };
    for (int id : subset) {
        int a = find(edges[(std::size_t)id].first), b = find(edges[(std::size_t)id].second);
        if (a == b) return false;
        parent[(std::size_t)a] = b;
    }
    return true;
}

// brute reference: does some spanning tree leave all co-tree components even?
bool xuong_exists_brute(int n, const std::vector<std::pair<int, int>>& edges) {
    int e = (int)edges.size();
    for (int mask = 0; mask < (1 << e); ++mask) {
        if (__builtin_popcount((unsigned)mask) != n - 1) continue;
        std::vector<int> subset;
        for (int i = 0; i < e; ++i)
            if (mask & (1 << i)) subset.push_back(i);
        if (!tree_spans(n, edges, subset)) continue;
        // co-tree component parities
        std::vector<int> parent(n);
        for (int v = 0; v < n; ++v) parent[(std::size_t)v] = v;
        std::function<int(int)> find = [&](int x) {
            while (parent[(std::size_t)x] != x) x = parent[(std::size_t)x];
            return x;
        };
        std::vector<char> in_tree((std::size_t)e, 0);
        for (int id : subset) in_tree[(std::size_t)id] = 1;
        for (int id = 0; id < e; ++id)
            if (!in_tree[(std::size_t)id])
                parent[(std::size_t)find(edges[(std::size_t)id].first)] =
                    find(edges[(std::size_t)id].second);
        std::map<int, int> count;
        for (int id = 0; id < e; ++id)
            if (!in_tree[(std::size_t)id]) ++count[find(edges[(std::size_t)id].first)];
        bool all_even = true;
        for (auto [root, c] : count)
            if (c % 2 != 0) all_even = false;
        if (all_even) return true;
    }
    return false;
}

} // namespace

TEST_CASE("tetrahedron rotation traces four faces on the sphere") {
    SurfaceComplex c = tetrahedron();
    CHECK(c.face_count() == 4);
    CHECK(c.euler_characteristic() == 2);
    CHECK(c.genus() == 0);
    c.validate();
}

TEST_CASE("single loop with adjacent darts lies on the sphere") {
    SurfaceComplex c = make_complex(1, {{0, 0}}, {{dart_fwd(0), dart_rev(0)}});
    CHECK(c.face_count() == 2);
    CHECK(c.euler_characteristic() == 2);
    CHECK(c.genus() == 0);
}

TEST_CASE("one-vertex torus fixture") {
    SurfaceComplex c = torus();
    REQUIRE(c.face_count() == 1);
    CHECK(c.faces[0] == std::vector<int>{dart_fwd(0), dart_fwd(1), dart_rev(0), dart_rev(1)});
    CHECK(c.genus() == 1);
}

TEST_CASE("trees trace one face of length 2E under any rotation") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + (int)rng.below(6);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v) edges.push_back({(int)rng.below((std::uint64_t)v), v});
        std::vector<std::vector<int>> rotation((std::size_t)n);
        for (int e = 0; e < (int)edges.size(); ++e) {
            rotation[(std::size_t)edges[(std::size_t)e].first].push_back(dart_fwd(e));
            rotation[(std::size_t)edges[(std::size_t)e].second].push_back(dart_rev(e));
        }
        // shuffle each rotation
        for (auto& rot : rotation)
            for (std::size_t i = rot.size(); i > 1; --i)
                std::swap(rot[i - 1], rot[rng.below(i)]);
        SurfaceComplex c = make_complex(n, edges, rotation);
        REQUIRE(c.face_count() == 1);
        CHECK(c.faces[0].size() == 2 * edges.size());
        CHECK(c.genus() == 0);
    }
}

TEST_CASE("trace_faces rejects malformed rotations") {
    CHECK_THROWS_AS(trace_faces(2, {{0, 1}}, {{dart_fwd(0), dart_rev(0)}, {}}), input_error);
    CHECK_THROWS_AS(trace_faces(2, {{0, 1}}, {{dart_fwd(0)}, {}}), input_error);
}

TEST_CASE("xuong certificate for the theta graph") {
    auto cert = xuong_certificate(2, theta_edges());
    REQUIRE(cert.has_value());
    CHECK(cert->tree_edges.size() == 1);
    CHECK(cert->pairing.size() == 1);
}

TEST_CASE("xuong certificate for K5") {
    auto cert = xuong_certificate(5, k5_edges());
    REQUIRE(cert.has_value());
    CHECK(cert->tree_edges.size() == 4);
    CHECK(cert->pairing.size() == 3);
}

TEST_CASE("xuong certificate of a tree has an empty pairing") {
    auto cert = xuong_certificate(4, {{0, 1}, {1, 2}, {1, 3}});
    REQUIRE(cert.has_value());
    CHECK(cert->pairing.empty());
}

TEST_CASE("xuong certificate rejects disconnected graphs") {
    CHECK_THROWS_AS(xuong_certificate(4, {{0, 1}, {2, 3}}), input_error);
}

TEST_CASE("no certificate for a single cycle") {
    // co-tree is always one odd edge
    CHECK(!xuong_certificate(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}).has_value());
    CHECK(!xuong_certificate(2, {{0, 1}, {0, 1}}).has_value());
}

TEST_CASE("certificate search matches brute-force existence on small graphs") {
    SplitMix64 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + (int)rng.below(4);
        auto edges = random_connected_graph(rng, n, (int)rng.below(4));
        if (edges.size() > 12) continue;
        bool found = xuong_certificate(n, edges).has_value();
        CHECK(found == xuong_exists_brute(n, edges));
    }
}

TEST_CASE("certificate search handles loops like any co-tree edge") {
    SplitMix64 rng(14);
    int embedded = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + (int)rng.below(3);
        auto edges = random_connected_graph(rng, n, (int)rng.below(3));
        int loops = 1 + (int)rng.below(2);
        for (int i = 0; i < loops; ++i) {
            int v = (int)rng.below((std::uint64_t)n);
            edges.push_back({v, v});
        }
        if (edges.size() > 12) continue;
        auto cert = xuong_certificate(n, edges);
        CHECK(cert.has_value() == xuong_exists_brute(n, edges));
        if (cert) {
            SurfaceComplex c = one_face_embed(n, edges, *cert);
            CHECK(c.face_count() == 1);
            CHECK(c.genus() == ((int)edges.size() - n + 1) / 2);
            ++embedded;
        }
    }
    CHECK(embedded >= 5);
}

TEST_CASE("one_face_embed on a tree") {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}};
    auto cert = xuong_certificate(3, edges);
    REQUIRE(cert.has_value());
    SurfaceComplex c = one_face_embed(3, edges, *cert);
    CHECK(c.face_count() == 1);
    CHECK(c.genus() == 0);
}

TEST_CASE("one_face_embed on the theta graph reaches the torus") {
    auto cert = xuong_certificate(2, theta_edges());
    REQUIRE(cert.has_value());
    SurfaceComplex c = one_face_embed(2, theta_edges(), *cert);
    CHECK(c.face_count() == 1);
    CHECK(c.genus() == 1);
}

TEST_CASE("one_face_embed on K5 reaches genus 3") {
    auto cert = xuong_certificate(5, k5_edges());
    REQUIRE(cert.has_value());
    SurfaceComplex c = one_face_embed(5, k5_edges(), *cert);
    CHECK(c.face_count() == 1);
    CHECK(c.genus() == 3);
}

TEST_CASE("one_face_embed builds the torus from two loops") {
    std::vector<std::pair<int, int>> edges = {{0, 0}, {0, 0}};
    auto cert = xuong_certificate(1, edges);
    REQUIRE(cert.has_value());
    SurfaceComplex c = one_face_embed(1, edges, *cert);
    CHECK(c.face_count() == 1);
    CHECK(c.genus() == 1);
}

TEST_CASE("one_face_embed walk uses every edge once per direction") {
    SplitMix64 rng(5);
    int built = 0;
    for (int trial = 0; trial < 60 && built < 20; ++trial) {
        int n = 2 + (int)rng.below(4);
        auto edges = random_connected_graph(rng, n, 1 + (int)rng.below(5));
        auto cert = xuong_certificate(n, edges);
        if (!cert) continue;
        ++built;
        SurfaceComplex c = one_face_embed(n, edges, *cert);
        REQUIRE(c.face_count() == 1);
        CHECK((int)c.faces[0].size() == 2 * (int)edges.size());
        std::set<int> darts(c.faces[0].begin(), c.faces[0].end());
        CHECK(darts.size() == 2 * edges.size());
        CHECK(c.genus() == ((int)edges.size() - n + 1) / 2);
    }
    CHECK(built >= 10);
}

TEST_CASE("one_face_embed handles a loop paired with an ordinary edge") {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 0}, {0, 1}};
    auto cert = xuong_certificate(2, edges);
    REQUIRE(cert.has_value());
    SurfaceComplex c = one_face_embed(2, edges, *cert);
    CHECK(c.face_count() == 1);
    CHECK(c.genus() == 1);
}

TEST_CASE("one_face_embed validates certificates") {
    auto edges = theta_edges();
    XuongCertificate bad;
    bad.tree_edges = {0};
    bad.pairing = {};  // leaves the co-tree uncovered
    CHECK_THROWS_AS(one_face_embed(2, edges, bad), input_error);
}

TEST_CASE("dual of the one-vertex torus is again a one-vertex torus") {
    SurfaceComplex dual = dual_complex(torus());
    CHECK(dual.vertex_count == 1);
    CHECK(dual.edge_count() == 2);
    CHECK(dual.face_count() == 1);
    CHECK(dual.genus() == 1);
}

TEST_CASE("dual of the tetrahedron swaps vertices and faces") {
    SurfaceComplex dual = dual_complex(tetrahedron());
    CHECK(dual.vertex_count == 4);
    CHECK(dual.edge_count() == 6);
    CHECK(dual.face_count() == 4);
    CHECK(dual.genus() == 0);
}

TEST_CASE("dual faces correspond to primal vertices") {
    SplitMix64 rng(6);
    int built = 0;
    for (int trial = 0; trial < 40 && built < 12; ++trial) {
        int n = 2 + (int)rng.below(3);
        auto edges = random_connected_graph(rng, n, 1 + (int)rng.below(4));
        // random rotation system
        std::vector<std::vector<int>> rotation((std::size_t)n);
        for (int e = 0; e < (int)edges.size(); ++e) {
            rotation[(std::size_t)edges[(std::size_t)e].first].push_back(dart_fwd(e));
            rotation[(std::size_t)edges[(std::size_t)e].second].push_back(dart_rev(e));
        }
        for (auto& rot : rotation)
            for (std::size_t i = rot.size(); i > 1; --i)
                std::swap(rot[i - 1], rot[rng.below(i)]);
        SurfaceComplex c = make_complex(n, edges, rotation);
        ++built;
        SurfaceComplex dual = dual_complex(c);
        CHECK(dual.vertex_count == c.face_count());
        CHECK(dual.face_count() == c.vertex_count);
        CHECK(dual.genus() == c.genus());
        dual.validate();
        // every dual face walk circles the edges incident to one primal vertex
        std::multiset<std::multiset<int>> primal_stars, dual_faces;
        for (int v = 0; v < n; ++v) {
            std::multiset<int> star;
            for (int d : rotation[(std::size_t)v]) star.insert(dart_edge(d));
            primal_stars.insert(star);
        }
        for (const auto& f : dual.faces) {
            std::multiset<int> ring;
            for (int d : f) ring.insert(dart_edge(d));
            dual_faces.insert(ring);
        }
        CHECK(primal_stars == dual_faces);
    }
    CHECK(built >= 10);
}

TEST_CASE("double dual preserves the edge correspondence") {
    SurfaceComplex c = tetrahedron();
    SurfaceComplex dual = dual_complex(c);
    SurfaceComplex dd = dual_complex(dual);
    CHECK(dd.vertex_count == c.vertex_count);
    CHECK(dd.edge_count() == c.edge_count());
    CHECK(dd.face_count() == c.face_count());
    CHECK(dd.genus() == c.genus());

    // identify each dual face with the primal vertex whose star it circles
    // (tetrahedron stars are pairwise distinct edge sets)
    std::vector<int> sigma((std::size_t)dual.face_count(), -1);
    for (int f = 0; f < dual.face_count(); ++f) {
        std::multiset<int> ring;
        for (int d : dual.faces[(std::size_t)f]) ring.insert(dart_edge(d));
        for (int v = 0; v < c.vertex_count; ++v) {
            std::multiset<int> star;
            for (int d : c.rotation[(std::size_t)v]) star.insert(dart_edge(d));
            if (star == ring) sigma[(std::size_t)f] = v;
        }
        REQUIRE(sigma[(std::size_t)f] >= 0);
    }
    // edge ids survive both dualizations; endpoints come back as the
    // original endpoints, possibly swapped by the orientation convention
    for (int e = 0; e < c.edge_count(); ++e) {
        auto a = c.edges[(std::size_t)e];
        auto b = dd.edges[(std::size_t)e];
        int bu = sigma[(std::size_t)b.first], bv = sigma[(std::size_t)b.second];
        bool same = (a.first == bu && a.second == bv) || (a.first == bv && a.second == bu);
        CHECK(same);
    }
}
