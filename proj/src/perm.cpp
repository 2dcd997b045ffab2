#include "ugtop/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "ugtop/errors.hpp"

namespace ugtop {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_perm(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= (int)p.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw input_error("compose: size mismatch");
    Perm r(a.size());
    for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = (int)x;
    return r;
}

int perm_parity(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    int transpositions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = (int)i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return (transpositions % 2 == 0) ? 1 : -1;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> lens;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = (int)i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

Perm cyclic_shift(int k, int c) {
    Perm p(k);
    c = ((c % k) + k) % k;
    for (int i = 0; i < k; ++i) p[i] = (i + c) % k;
    return p;
}

int shift_amount(const Perm& p) {
    if (p.empty()) return 0;
    int k = (int)p.size();
    int c = p[0];
    for (int i = 0; i < k; ++i)
        if (p[i] != (i + c) % k) return -1;
    return c;
}

std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t cap) {
    if (gens.empty()) return {};
    int n = (int)gens[0].size();
    std::set<Perm> seen;
    std::deque<Perm> queue;
    Perm id = identity_perm(n);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Perm cur = queue.front();
        queue.pop_front();
        for (const Perm& g : gens) {
            Perm next = compose(g, cur);
            if (seen.insert(next).second) {
                if (seen.size() > cap) return {};
                queue.push_back(next);
            }
        }
    }
    return std::vector<Perm>(seen.begin(), seen.end());
}

std::vector<Perm> symmetric_group(int n) {
    if (n < 0 || n > 8) throw budget_error("symmetric_group: n must be in [0, 8]");
    Perm p = identity_perm(n);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Perm> alternating_group(int n) {
    std::vector<Perm> out;
    for (const Perm& p : symmetric_group(n))
        if (perm_parity(p) == 1) out.push_back(p);
    return out;
}

} // namespace ugtop
