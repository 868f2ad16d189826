#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace uksat {

// Vertex sets over a ground set of at most 64 labeled vertices.
// Vertex v (1-based) corresponds to bit v-1, so numeric order on masks
// is exactly colex order on equal-size sets.
using Mask = std::uint64_t;

// Exact binomial coefficient for 0 <= k <= n <= 63; 0 outside that range.
std::uint64_t binom(int n, int k);

constexpr Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr Mask vbit(int v) { return Mask{1} << (v - 1); }

// Colex-ordered enumeration of all k-subsets of {1..n} (Gosper's hack).
template <typename F>
void for_each_ksubset(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        f(Mask{0});
        return;
    }
    Mask x = full_mask(k);
    const Mask limit = full_mask(n);
    while (true) {
        f(x);
        Mask u = x & (~x + 1);
        Mask v = x + u;
        if (v == 0 || v > limit) break;
        x = v | (((x ^ v) >> 2) / u);
    }
}

// Lex-ordered enumeration of k-subsets of the set bits of `universe`.
// The callback may return bool; returning true stops the enumeration early.
// Returns true iff stopped early.
template <typename F>
bool for_each_ksubset_of(Mask universe, int k, F&& f) {
    constexpr bool stoppable = std::is_invocable_r_v<bool, F, Mask>;
    int pos[64];
    int np = 0;
    for (Mask u = universe; u; u &= u - 1) pos[np++] = std::countr_zero(u);
    if (k < 0 || k > np) return false;
    if (k == 0) {
        if constexpr (stoppable) return f(Mask{0});
        else { f(Mask{0}); return false; }
    }
    int idx[64];
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask s = 0;
        for (int i = 0; i < k; ++i) s |= Mask{1} << pos[idx[i]];
        if constexpr (stoppable) {
            if (f(s)) return true;
        } else {
            f(s);
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == np - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

template <typename F>
bool for_each_ksubset_lex(int n, int k, F&& f) {
    return for_each_ksubset_of(full_mask(n), k, static_cast<F&&>(f));
}

// Lexicographic order on the sorted element lists of two sets.
inline bool lex_less(Mask a, Mask b) {
    while (a && b) {
        Mask la = a & (~a + 1);
        Mask lb = b & (~b + 1);
        if (la != lb) return la < lb;
        a ^= la;
        b ^= lb;
    }
    return a == 0 && b != 0;
}

inline std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    for (Mask u = m; u; u &= u - 1) out.push_back(std::countr_zero(u) + 1);
    return out;
}

}  // namespace uksat
