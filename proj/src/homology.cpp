#include "ugtop/homology.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

#include "ugtop/errors.hpp"

namespace ugtop {

namespace {

int norm_mod(long long v, int k) { return (int)(((v % k) + k) % k); }

void check_k(int k) {
    if (k < 2) throw input_error("coefficient modulus must be >= 2");
}

std::vector<int> component_roots(const SurfaceComplex& X, std::vector<int>* comp_out = nullptr) {
    std::vector<int> parent(X.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : X.edges) parent[find(e.first)] = find(e.second);
    std::vector<int> comp(X.vertex_count, -1);
    std::vector<int> roots;
    for (int v = 0; v < X.vertex_count; ++v) {
        int r = find(v);
        if (comp[r] == -1) {
            comp[r] = (int)roots.size();
            roots.push_back(v);  // least vertex of the component
        }
        comp[v] = comp[r];
    }
    if (comp_out) *comp_out = comp;
    return roots;
}

} // namespace

int support(const std::vector<int>& values) {
    int s = 0;
    for (int v : values)
        if (v != 0) ++s;
    return s;
}

Chain0 boundary1(const Chain1& c, const SurfaceComplex& X) {
    check_k(c.k);
    if ((int)c.values.size() != X.edge_count()) throw input_error("boundary1: size mismatch");
    Chain0 out{c.k, std::vector<int>((std::size_t)X.vertex_count, 0)};
    for (int e = 0; e < X.edge_count(); ++e) {
        auto [u, v] = X.edges[(std::size_t)e];
        out.values[(std::size_t)u] = norm_mod(out.values[(std::size_t)u] + c.values[(std::size_t)e], c.k);
        out.values[(std::size_t)v] = norm_mod(out.values[(std::size_t)v] - c.values[(std::size_t)e], c.k);
    }
    return out;
}

Chain1 boundary2(const Chain2& c, const SurfaceComplex& X) {
    check_k(c.k);
    if ((int)c.values.size() != X.face_count()) throw input_error("boundary2: size mismatch");
    Chain1 out{c.k, std::vector<int>(X.edges.size(), 0)};
    for (int f = 0; f < X.face_count(); ++f) {
        int coeff = c.values[(std::size_t)f];
        if (coeff == 0) continue;
        for (int d : X.faces[(std::size_t)f]) {
            int e = dart_edge(d);
            int sign = dart_forward(d) ? 1 : -1;
            out.values[(std::size_t)e] =
                norm_mod(out.values[(std::size_t)e] + (long long)sign * coeff, c.k);
        }
    }
    return out;
}

Cochain1 coboundary0(const Cochain0& f, const SurfaceComplex& X) {
    check_k(f.k);
    if ((int)f.values.size() != X.vertex_count) throw input_error("coboundary0: size mismatch");
    Cochain1 out{f.k, std::vector<int>(X.edges.size(), 0)};
    for (int e = 0; e < X.edge_count(); ++e) {
        auto [u, v] = X.edges[(std::size_t)e];
        out.values[(std::size_t)e] =
            norm_mod(f.values[(std::size_t)u] - f.values[(std::size_t)v], f.k);
    }
    return out;
}

bool is_cycle(const Chain1& z, const SurfaceComplex& X) {
    return support(boundary1(z, X).values) == 0;
}

bool is_cocycle(const Cochain1& f, const SurfaceComplex& X) {
    check_k(f.k);
    if ((int)f.values.size() != X.edge_count()) throw input_error("is_cocycle: size mismatch");
    for (const auto& face : X.faces) {
        long long sum = 0;
        for (int d : face) {
            int sign = dart_forward(d) ? 1 : -1;
            sum += sign * f.values[(std::size_t)dart_edge(d)];
        }
        if (norm_mod(sum, f.k) != 0) return false;
    }
    return true;
}

Cochain1 residual(const Cochain1& a, const Cochain0& alpha, const SurfaceComplex& X) {
    if (a.k != alpha.k) throw input_error("residual: modulus mismatch");
    Cochain1 d = coboundary0(alpha, X);
    Cochain1 out{a.k, std::vector<int>(a.values.size(), 0)};
    if (a.values.size() != d.values.size()) throw input_error("residual: size mismatch");
    for (std::size_t e = 0; e < a.values.size(); ++e)
        out.values[e] = norm_mod(a.values[e] - d.values[e], a.k);
    return out;
}

namespace {

std::uint64_t pow_checked(std::uint64_t k, int n, std::uint64_t budget, const char* who) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > budget / k) {
            throw budget_error(std::string(who) + ": k^" + std::to_string(n) +
                               " candidates exceed budget " + std::to_string(budget));
        }
        r *= k;
    }
    if (r > budget)
        throw budget_error(std::string(who) + ": candidates exceed budget");
    return r;
}

} // namespace

CoholocResult coholoc_brute(const SurfaceComplex& X, const Cochain1& a, std::uint64_t budget) {
    check_k(a.k);
    if (!is_cocycle(a, X)) throw input_error("coholoc_brute: input is not a cocycle");

    std::vector<int> comp;
    std::vector<int> roots = component_roots(X, &comp);
    std::vector<char> is_root(X.vertex_count, 0);
    for (int r : roots) is_root[(std::size_t)r] = 1;
    std::vector<int> free_vertices;
    for (int v = 0; v < X.vertex_count; ++v)
        if (!is_root[(std::size_t)v]) free_vertices.push_back(v);

    int k = a.k;
    pow_checked((std::uint64_t)k, (int)free_vertices.size(), budget, "coholoc_brute");

    Cochain0 alpha{k, std::vector<int>((std::size_t)X.vertex_count, 0)};
    long long best = -1;
    Cochain0 witness = alpha;
    for (;;) {
        long long s = 0;
        for (int e = 0; e < X.edge_count(); ++e) {
            auto [u, v] = X.edges[(std::size_t)e];
            if (norm_mod(a.values[(std::size_t)e] - alpha.values[(std::size_t)u] +
                             alpha.values[(std::size_t)v],
                         k) != 0)
                ++s;
        }
        if (best < 0 || s < best) {
            best = s;
            witness = alpha;
        }
        // odometer over non-root vertices, last fastest: full-vector lex order
        int i = (int)free_vertices.size() - 1;
        for (; i >= 0; --i) {
            int v = free_vertices[(std::size_t)i];
            if (++alpha.values[(std::size_t)v] < k) break;
            alpha.values[(std::size_t)v] = 0;
        }
        if (i < 0) break;
    }
    return {best, witness};
}

HomlocResult homloc_brute(const SurfaceComplex& X, const Chain1& z, std::uint64_t budget) {
    check_k(z.k);
    if (!is_cycle(z, X)) throw input_error("homloc_brute: input is not a cycle");

    int k = z.k;
    int F = X.face_count();
    pow_checked((std::uint64_t)k, F, budget, "homloc_brute");

    // signed incidence of each face on each edge, reduced mod k
    std::vector<std::vector<std::pair<int, int>>> inc((std::size_t)F);  // (edge, coeff)
    for (int f = 0; f < F; ++f) {
        std::vector<int> coeff(X.edges.size(), 0);
        for (int d : X.faces[(std::size_t)f])
            coeff[(std::size_t)dart_edge(d)] += dart_forward(d) ? 1 : -1;
        for (int e = 0; e < X.edge_count(); ++e) {
            int c = norm_mod(coeff[(std::size_t)e], k);
            if (c != 0) inc[(std::size_t)f].push_back({e, c});
        }
    }

    Chain2 b{k, std::vector<int>((std::size_t)F, 0)};
    long long best = -1;
    Chain2 witness = b;
    std::vector<int> res(X.edges.size());
    for (;;) {
        for (int e = 0; e < X.edge_count(); ++e) res[(std::size_t)e] = z.values[(std::size_t)e];
        for (int f = 0; f < F; ++f) {
            int coeff = b.values[(std::size_t)f];
            if (coeff == 0) continue;
            for (auto [e, c] : inc[(std::size_t)f])
                res[(std::size_t)e] = norm_mod(res[(std::size_t)e] - (long long)c * coeff, k);
        }
        long long s = support(res);
        if (best < 0 || s < best) {
            best = s;
            witness = b;
        }
        int i = F - 1;
        for (; i >= 0; --i) {
            if (++b.values[(std::size_t)i] < k) break;
            b.values[(std::size_t)i] = 0;
        }
        if (i < 0) break;
    }
    return {best, witness};
}

Cochain1 maxlin_to_cocycle(const Max2LinInstance& inst, const SurfaceComplex& X) {
    inst.validate();
    if ((int)inst.constraints.size() != X.edge_count())
        throw input_error("maxlin_to_cocycle: one constraint per edge required");
    Cochain1 a{inst.k, std::vector<int>(X.edges.size(), 0)};
    for (int e = 0; e < X.edge_count(); ++e) {
        const auto& c = inst.constraints[(std::size_t)e];
        if (std::pair<int, int>(c.u, c.v) != X.edges[(std::size_t)e])
            throw input_error("maxlin_to_cocycle: constraint orientation differs from edge " +
                              std::to_string(e));
        a.values[(std::size_t)e] = c.c;
    }
    if (!is_cocycle(a, X))
        throw input_error("maxlin_to_cocycle: not a surface instance (nonzero face sum)");
    return a;
}

Max2LinInstance cocycle_to_maxlin(const SurfaceComplex& X, const Cochain1& a) {
    if ((int)a.values.size() != X.edge_count())
        throw input_error("cocycle_to_maxlin: size mismatch");
    Max2LinInstance inst;
    inst.k = a.k;
    inst.vertex_count = X.vertex_count;
    for (int e = 0; e < X.edge_count(); ++e) {
        auto [u, v] = X.edges[(std::size_t)e];
        inst.constraints.push_back({u, v, norm_mod(a.values[(std::size_t)e], a.k)});
    }
    return inst;
}

Assignment representative_to_assignment(const SurfaceComplex& X, const Cochain1& a,
                                        const Cochain1& aprime) {
    if (a.k != aprime.k || a.values.size() != aprime.values.size())
        throw input_error("representative_to_assignment: shape mismatch");
    int k = a.k;
    // solve delta(alpha) = a - aprime by propagation from component roots
    std::vector<std::vector<std::pair<int, int>>> inc((std::size_t)X.vertex_count);
    for (int e = 0; e < X.edge_count(); ++e) {
        auto [u, v] = X.edges[(std::size_t)e];
        inc[(std::size_t)u].push_back({e, v});
        if (u != v) inc[(std::size_t)v].push_back({e, u});
    }
    std::vector<int> alpha((std::size_t)X.vertex_count, 0);
    std::vector<char> have((std::size_t)X.vertex_count, 0);
    std::vector<int> roots = component_roots(X);
    for (int r : roots) {
        alpha[(std::size_t)r] = 0;
        have[(std::size_t)r] = 1;
        std::deque<int> queue{r};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (auto [e, w] : inc[(std::size_t)u]) {
                int d = norm_mod(a.values[(std::size_t)e] - aprime.values[(std::size_t)e], k);
                // delta(alpha)(x -> y) = alpha_x - alpha_y = d on edge e = (x, y)
                bool from_tail = X.edges[(std::size_t)e].first == u;
                int expect = from_tail ? norm_mod(alpha[(std::size_t)u] - d, k)
                                       : norm_mod(alpha[(std::size_t)u] + d, k);
                if (!have[(std::size_t)w]) {
                    alpha[(std::size_t)w] = expect;
                    have[(std::size_t)w] = 1;
                    queue.push_back(w);
                } else if (alpha[(std::size_t)w] != expect) {
                    throw input_error("representative_to_assignment: inputs are not cohomologous");
                }
            }
        }
    }
    return alpha;
}

Cochain1 dual_transport(const Chain1& z, const SurfaceComplex& X, const SurfaceComplex& Xdual) {
    if (!is_cycle(z, X)) throw input_error("dual_transport: input is not a cycle");
    if (Xdual.edge_count() != X.edge_count())
        throw input_error("dual_transport: dual complex does not match");
    Cochain1 out{z.k, z.values};
    if (!is_cocycle(out, Xdual))
        throw input_error("dual_transport: transported cochain is not a cocycle on the dual");
    return out;
}

} // namespace ugtop
