#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace gapcert {

/// Permutations of {0..n-1} in image form: p[i] = image of i.
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool perm_is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

/// Apply a first, then b.
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

inline Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

inline Perm perm_power(const Perm& p, long k) {
    Perm base = k >= 0 ? p : perm_inverse(p);
    long m = k >= 0 ? k : -k;
    Perm r = perm_identity(static_cast<int>(p.size()));
    while (m > 0) {
        if (m & 1) r = perm_compose(r, base);
        base = perm_compose(base, base);
        m >>= 1;
    }
    return r;
}

inline bool perm_is_valid(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline std::vector<int> perm_cycle_lengths(const Perm& p) {
    std::vector<int> lens;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<size_t>(p[j]);
            ++len;
        }
        lens.push_back(len);
    }
    return lens;
}

inline int perm_count_cycles_of_length(const Perm& p, int c) {
    int count = 0;
    for (int len : perm_cycle_lengths(p))
        if (len == c) ++count;
    return count;
}

inline long perm_order(const Perm& p) {
    long ord = 1;
    for (int len : perm_cycle_lengths(p)) ord = std::lcm(ord, static_cast<long>(len));
    return ord;
}

} // namespace gapcert
