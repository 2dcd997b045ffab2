#include "ugtop/csp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "ugtop/errors.hpp"
#include "ugtop/rng.hpp"

namespace ugtop {

void UGInstance::validate() const {
    if (k < 1) throw input_error("UGInstance: k must be >= 1");
    if (vertex_count < 0) throw input_error("UGInstance: negative vertex count");
    for (const auto& c : constraints) {
        if (c.u == c.v) throw input_error("UGInstance: self-loop constraint");
        if (c.u < 0 || c.u >= vertex_count || c.v < 0 || c.v >= vertex_count)
            throw input_error("UGInstance: vertex id out of range");
        if ((int)c.pi.size() != k || !is_perm(c.pi))
            throw input_error("UGInstance: constraint permutation is not a bijection on [k]");
    }
}

void Max2LinInstance::validate() const {
    if (k < 2) throw input_error("Max2LinInstance: k must be >= 2");
    if (vertex_count < 0) throw input_error("Max2LinInstance: negative vertex count");
    for (const auto& c : constraints) {
        if (c.u == c.v) throw input_error("Max2LinInstance: self-loop constraint");
        if (c.u < 0 || c.u >= vertex_count || c.v < 0 || c.v >= vertex_count)
            throw input_error("Max2LinInstance: vertex id out of range");
        if (c.c < 0 || c.c >= k) throw input_error("Max2LinInstance: shift out of range");
    }
}

UGInstance Max2LinInstance::to_ug() const {
    validate();
    UGInstance out;
    out.k = k;
    out.vertex_count = vertex_count;
    out.constraints.reserve(constraints.size());
    for (const auto& c : constraints) {
        // x_u - x_v = c means label(v) = label(u) - c
        out.constraints.push_back({c.u, c.v, cyclic_shift(k, -c.c)});
    }
    return out;
}

namespace {

void check_assignment(int k, int vertex_count, const Assignment& s) {
    if ((int)s.size() != vertex_count)
        throw input_error("assignment length does not match vertex count");
    for (int v : s)
        if (v < 0 || v >= k) throw input_error("assignment value out of range");
}

} // namespace

long long satisfied_count(const UGInstance& inst, const Assignment& s) {
    check_assignment(inst.k, inst.vertex_count, s);
    long long sat = 0;
    for (const auto& c : inst.constraints)
        if (c.pi[s[c.u]] == s[c.v]) ++sat;
    return sat;
}

long long satisfied_count(const Max2LinInstance& inst, const Assignment& s) {
    check_assignment(inst.k, inst.vertex_count, s);
    long long sat = 0;
    for (const auto& c : inst.constraints)
        if ((s[c.u] - s[c.v] - c.c) % inst.k == 0) ++sat;
    return sat;
}

Rat value(const UGInstance& inst, const Assignment& s) {
    if (inst.constraints.empty()) throw input_error("value: instance has no constraints");
    return Rat(satisfied_count(inst, s), (long long)inst.constraints.size());
}

Rat value(const Max2LinInstance& inst, const Assignment& s) {
    if (inst.constraints.empty()) throw input_error("value: instance has no constraints");
    return Rat(satisfied_count(inst, s), (long long)inst.constraints.size());
}

namespace {

// k^n with saturation at 2^63-1.
std::uint64_t pow_sat(std::uint64_t k, int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > UINT64_MAX / 2 / (k == 0 ? 1 : k)) return UINT64_MAX;
        r *= k;
    }
    return r;
}

bool next_assignment(Assignment& a, int k) {
    for (int i = (int)a.size() - 1; i >= 0; --i) {
        if (++a[i] < k) return true;
        a[i] = 0;
    }
    return false;
}

Assignment assignment_from_index(std::uint64_t idx, int n, int k) {
    Assignment a(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        a[i] = (int)(idx % k);
        idx /= k;
    }
    return a;
}

struct ChunkBest {
    long long count = -1;
    std::uint64_t chunk = 0;
    Assignment witness;
};

template <class Eval>
OptResult brute_core(int n, int k, const BruteOptions& opt, std::uint64_t total_constraints,
                     Eval&& eval) {
    std::uint64_t total = pow_sat((std::uint64_t)k, n);
    if (total > opt.budget)
        throw budget_error("opt_brute: k^n = " + std::to_string((double)std::pow((double)k, n)) +
                           " assignments exceeds budget " + std::to_string(opt.budget));
    (void)total_constraints;

    if (n == 0) return {0, {}};

    int threads = std::max(1, opt.threads);
    if (threads == 1 || total < (1u << 14)) {
        Assignment a(n, 0);
        long long best = -1;
        Assignment witness;
        do {
            long long sat = eval(a);
            if (sat > best) {
                best = sat;
                witness = a;
            }
        } while (next_assignment(a, k));
        return {best, witness};
    }

    // Partition the lex-ordered space into k^m contiguous chunks; the winner
    // is the highest count, ties broken by lowest chunk, within a chunk by
    // first occurrence. This reproduces the single-threaded result.
    int m = 0;
    std::uint64_t chunks = 1;
    while (m < n && chunks < (std::uint64_t)threads * 4) {
        chunks *= k;
        ++m;
    }
    std::uint64_t per_chunk = pow_sat((std::uint64_t)k, n - m);
    std::vector<ChunkBest> results((std::size_t)threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            ChunkBest local;
            for (std::uint64_t c = (std::uint64_t)t; c < chunks; c += (std::uint64_t)threads) {
                Assignment a = assignment_from_index(c * per_chunk, n, k);
                for (std::uint64_t i = 0; i < per_chunk; ++i) {
                    long long sat = eval(a);
                    // chunks ascend within a thread, so strict improvement
                    // keeps the lex-least witness at the maximum
                    if (sat > local.count) {
                        local.count = sat;
                        local.chunk = c;
                        local.witness = a;
                    }
                    if (i + 1 < per_chunk) next_assignment(a, k);
                }
            }
            results[(std::size_t)t] = std::move(local);
        });
    }
    for (auto& th : pool) th.join();

    ChunkBest best;
    for (const auto& r : results) {
        if (r.count < 0) continue;
        if (r.count > best.count || (r.count == best.count && r.chunk < best.chunk)) {
            best = r;
        }
    }
    return {best.count, best.witness};
}

} // namespace

OptResult opt_brute(const UGInstance& inst, const BruteOptions& opt) {
    inst.validate();
    if (inst.constraints.empty()) throw input_error("opt_brute: instance has no constraints");
    return brute_core(inst.vertex_count, inst.k, opt, inst.constraints.size(),
                      [&](const Assignment& a) {
                          long long sat = 0;
                          for (const auto& c : inst.constraints)
                              if (c.pi[a[c.u]] == a[c.v]) ++sat;
                          return sat;
                      });
}

OptResult opt_brute(const Max2LinInstance& inst, const BruteOptions& opt) {
    inst.validate();
    if (inst.constraints.empty()) throw input_error("opt_brute: instance has no constraints");
    int k = inst.k;
    return brute_core(inst.vertex_count, inst.k, opt, inst.constraints.size(),
                      [&, k](const Assignment& a) {
                          long long sat = 0;
                          for (const auto& c : inst.constraints)
                              if ((a[c.u] + k - a[c.v]) % k == c.c) ++sat;
                          return sat;
                      });
}

Assignment greedy_half(const UGInstance& inst) {
    inst.validate();
    int n = inst.vertex_count;
    // incident edge lists, ascending edge id
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < (int)inst.constraints.size(); ++e) {
        incident[inst.constraints[e].u].push_back(e);
        incident[inst.constraints[e].v].push_back(e);
    }
    Assignment labels(n, 0);
    std::vector<char> used(n, 0);
    for (int v = 0; v < n; ++v) {
        if (used[v] || incident[v].empty()) continue;
        int e = incident[v][0];
        const auto& con = inst.constraints[e];
        int w = con.u == v ? con.v : con.u;
        if (used[w]) {
            // unique label for v satisfying the edge given w's fixed label
            labels[v] = con.u == v ? inverse(con.pi)[labels[w]] : con.pi[labels[w]];
            used[v] = 1;
        } else {
            // both free: give v the least label, solve for w
            labels[v] = 0;
            labels[w] = con.u == v ? con.pi[0] : inverse(con.pi)[0];
            used[v] = 1;
            used[w] = 1;
        }
    }
    return labels;
}

Assignment greedy_half(const Max2LinInstance& inst) { return greedy_half(inst.to_ug()); }

namespace {

long long degree_positive(int n, const std::vector<std::pair<int, int>>& ends) {
    std::vector<char> deg(n, 0);
    for (auto [u, v] : ends) {
        deg[u] = 1;
        deg[v] = 1;
    }
    long long vpos = 0;
    for (char d : deg) vpos += d;
    return vpos;
}

} // namespace

long long greedy_bound(const UGInstance& inst) {
    std::vector<std::pair<int, int>> ends;
    for (const auto& c : inst.constraints) ends.push_back({c.u, c.v});
    long long vpos = degree_positive(inst.vertex_count, ends);
    return (vpos + 1) / 2;
}

long long greedy_bound(const Max2LinInstance& inst) {
    std::vector<std::pair<int, int>> ends;
    for (const auto& c : inst.constraints) ends.push_back({c.u, c.v});
    long long vpos = degree_positive(inst.vertex_count, ends);
    return (vpos + 1) / 2;
}

GapParams pad_gap(const Rat& eps, const Rat& delta, const Rat& a) {
    if (!(Rat(0) < delta) || !(delta < Rat(1)))
        throw input_error("pad_gap: delta must be in (0,1)");
    if (!(Rat(0) < eps) || !(eps < Rat(1)))
        throw input_error("pad_gap: eps must be in (0,1)");
    if (a < Rat(0)) throw input_error("pad_gap: a must be >= 0");

    Rat two_da = Rat(2) * delta * a;
    Rat lower = two_da / (Rat(1) + two_da);
    Rat Delta = (lower == Rat(0)) ? Rat(1, 1000) : lower * Rat(101, 100);
    if (!(Delta < Rat(1)) || !(eps + Delta < Rat(1)))
        throw input_error("pad_gap: gap collapsed (Delta or eps + Delta reached 1)");
    return GapParams{eps, delta, a, Delta};
}

Max2LinInstance gen_planted(int n, int degree, int k, double noise, std::uint64_t seed) {
    if (n < 1 || degree < 0) throw input_error("gen_planted: bad n or degree");
    if (k < 2) throw input_error("gen_planted: k must be >= 2");
    if (noise < 0.0 || noise > 1.0) throw input_error("gen_planted: noise must be in [0,1]");
    if ((long long)n * degree % 2 != 0)
        throw input_error("gen_planted: n * degree must be even");

    SplitMix64 rng(seed);
    long long stubs_n = (long long)n * degree;
    std::vector<int> stubs((std::size_t)stubs_n);
    for (long long i = 0; i < stubs_n; ++i) stubs[(std::size_t)i] = (int)(i / degree);

    // configuration model; resample the pairing until free of self-loops
    const int max_attempts = 10000;
    std::vector<std::pair<int, int>> pairs;
    for (int attempt = 0;; ++attempt) {
        if (attempt >= max_attempts)
            throw input_error("gen_planted: could not avoid self-loops (degree too high for n?)");
        for (long long i = stubs_n - 1; i > 0; --i) {
            long long j = (long long)rng.below((std::uint64_t)i + 1);
            std::swap(stubs[(std::size_t)i], stubs[(std::size_t)j]);
        }
        pairs.clear();
        bool ok = true;
        for (long long i = 0; i < stubs_n; i += 2) {
            int u = stubs[(std::size_t)i], v = stubs[(std::size_t)i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            pairs.push_back({u, v});
        }
        if (ok) break;
    }

    Assignment hidden((std::size_t)n);
    for (int i = 0; i < n; ++i) hidden[(std::size_t)i] = (int)rng.below((std::uint64_t)k);

    Max2LinInstance out;
    out.k = k;
    out.vertex_count = n;
    for (auto [u, v] : pairs) {
        int c = ((hidden[(std::size_t)u] - hidden[(std::size_t)v]) % k + k) % k;
        if (rng.unit() < noise) c = (c + 1 + (int)rng.below((std::uint64_t)(k - 1))) % k;
        out.constraints.push_back({u, v, c});
    }
    return out;
}

} // namespace ugtop
