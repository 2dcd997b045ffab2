#include "ugtop/kkmo.hpp"

#include <algorithm>
#include <string>

#include "ugtop/errors.hpp"

namespace ugtop {

std::vector<int> fold_canonical(std::vector<int> raw, int q) {
    if (raw.empty()) throw input_error("fold_canonical: empty tuple");
    for (int v : raw)
        if (v < 0 || v >= q) throw input_error("fold_canonical: coordinate out of range");
    int base = raw[0];
    for (int& v : raw) v = ((v - base) % q + q) % q;
    return raw;
}

std::vector<int> act_tuple(const std::vector<int>& t, const Perm& sigma) {
    if (t.size() != sigma.size()) throw input_error("act_tuple: size mismatch");
    std::vector<int> out(t.size());
    for (std::size_t m = 0; m < t.size(); ++m) out[(std::size_t)sigma[m]] = t[m];
    return out;
}

long long folded_count(int k, int q) {
    long long r = 1;
    for (int i = 0; i + 1 < k; ++i) r *= q;
    return r;
}

long long tuple_rank(const std::vector<int>& canonical, int q) {
    long long r = 0;
    for (std::size_t i = 1; i < canonical.size(); ++i) r = r * q + canonical[i];
    return r;
}

std::vector<int> tuple_unrank(long long rank, int k, int q) {
    std::vector<int> t((std::size_t)k, 0);
    for (int i = k - 1; i >= 1; --i) {
        t[(std::size_t)i] = (int)(rank % q);
        rank /= q;
    }
    return t;
}

long long reduced_vertex_id(int i, const std::vector<int>& t, int q) {
    return (long long)i * folded_count((int)t.size(), q) + tuple_rank(t, q);
}

UGInstance square(const UGInstance& inst, bool keep_original) {
    inst.validate();
    UGInstance out;
    out.k = inst.k;
    out.vertex_count = inst.vertex_count;
    if (keep_original) out.constraints = inst.constraints;

    // outgoing darts per vertex: (edge index, transition from this vertex)
    std::vector<std::vector<int>> darts(inst.vertex_count);  // dart = 2e | 2e+1
    for (int e = 0; e < (int)inst.constraints.size(); ++e) {
        darts[inst.constraints[e].u].push_back(2 * e);
        darts[inst.constraints[e].v].push_back(2 * e + 1);
    }
    for (int w = 0; w < inst.vertex_count; ++w) {
        const auto& dw = darts[w];
        for (std::size_t a = 0; a < dw.size(); ++a) {
            int ea = dw[a] >> 1;
            bool fa = (dw[a] & 1) == 0;
            const auto& ca = inst.constraints[ea];
            int far_a = fa ? ca.v : ca.u;
            // transition from w to far_a
            Perm ta = fa ? ca.pi : inverse(ca.pi);
            for (std::size_t b = a + 1; b < dw.size(); ++b) {
                int eb = dw[b] >> 1;
                bool fb = (dw[b] & 1) == 0;
                const auto& cb = inst.constraints[eb];
                int far_b = fb ? cb.v : cb.u;
                if (far_a == far_b) continue;  // would form a self-loop
                Perm tb = fb ? cb.pi : inverse(cb.pi);
                // label(far_a) -> label(w) -> label(far_b)
                out.constraints.push_back({far_a, far_b, compose(tb, inverse(ta))});
            }
        }
    }
    return out;
}

Max2LinInstance kkmo_reduce(const UGInstance& inst, int q, std::uint64_t budget) {
    inst.validate();
    if (q < 2) throw input_error("kkmo_reduce: q must be >= 2");
    int k = inst.k;
    long long tuples = folded_count(k, q);
    long long out_vertices = (long long)inst.vertex_count * tuples;
    if ((std::uint64_t)out_vertices > budget)
        throw budget_error("kkmo_reduce: n*q^(k-1) = " + std::to_string(out_vertices) +
                           " vertices exceeds budget " + std::to_string(budget));

    UGInstance squared = square(inst);
    if ((std::uint64_t)((long long)squared.constraints.size() * tuples) > budget)
        throw budget_error("kkmo_reduce: constraint count exceeds budget");

    Max2LinInstance out;
    out.k = q;
    out.vertex_count = (int)out_vertices;
    for (const auto& con : squared.constraints) {
        Perm tau_inv = inverse(con.pi);
        for (long long r = 0; r < tuples; ++r) {
            std::vector<int> t = tuple_unrank(r, k, q);
            std::vector<int> head = fold_canonical(act_tuple(t, con.pi), q);
            int shift = ((t[0] - t[(std::size_t)tau_inv[0]]) % q + q) % q;
            out.constraints.push_back({(int)reduced_vertex_id(con.u, t, q),
                                       (int)reduced_vertex_id(con.v, head, q), shift});
        }
    }
    return out;
}

std::vector<int> transport_iso(const UGInstance& inst, const std::vector<Perm>& g, int q) {
    inst.validate();
    if ((int)g.size() != inst.vertex_count)
        throw input_error("transport_iso: one permutation per vertex required");
    for (const auto& p : g)
        if ((int)p.size() != inst.k || !is_perm(p))
            throw input_error("transport_iso: invalid relabeling witness");
    long long tuples = folded_count(inst.k, q);
    std::vector<int> shifts((std::size_t)((long long)inst.vertex_count * tuples));
    for (int i = 0; i < inst.vertex_count; ++i) {
        for (long long r = 0; r < tuples; ++r) {
            std::vector<int> t = tuple_unrank(r, inst.k, q);
            int c = ((t[0] - t[(std::size_t)g[(std::size_t)i][0]]) % q + q) % q;
            shifts[(std::size_t)(i * tuples + r)] = c;
        }
    }
    return shifts;
}

std::vector<long long> reduced_renaming(const UGInstance& inst, const std::vector<Perm>& g,
                                        int q) {
    long long tuples = folded_count(inst.k, q);
    std::vector<long long> phi((std::size_t)((long long)inst.vertex_count * tuples));
    for (int i = 0; i < inst.vertex_count; ++i) {
        Perm gi_inv = inverse(g[(std::size_t)i]);
        for (long long r = 0; r < tuples; ++r) {
            std::vector<int> t = tuple_unrank(r, inst.k, q);
            std::vector<int> image = fold_canonical(act_tuple(t, gi_inv), q);
            phi[(std::size_t)(i * tuples + r)] = reduced_vertex_id(i, image, q);
        }
    }
    return phi;
}

UGInstance relabel_instance(const UGInstance& inst, const std::vector<Perm>& g) {
    inst.validate();
    if ((int)g.size() != inst.vertex_count)
        throw input_error("relabel_instance: one permutation per vertex required");
    UGInstance out = inst;
    for (auto& con : out.constraints)
        con.pi = compose(inverse(g[(std::size_t)con.v]), compose(con.pi, g[(std::size_t)con.u]));
    return out;
}

} // namespace ugtop
