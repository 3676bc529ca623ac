#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace mono {

inline std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

/// Checked n^arity; returns 0 on overflow past `limit`.
inline std::uint64_t bounded_power(int n, int arity, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (int i = 0; i < arity; ++i) {
        r *= static_cast<std::uint64_t>(n);
        if (r > limit) return 0;
    }
    return r;
}

/// Visits every tuple in {0..n-1}^arity in lexicographic order.
template <typename F>
void for_each_tuple(int n, int arity, F&& visit) {
    if (arity == 0) {
        std::vector<int> empty;
        visit(std::span<const int>(empty));
        return;
    }
    if (n <= 0) return;
    std::vector<int> t(static_cast<std::size_t>(arity), 0);
    while (true) {
        visit(std::span<const int>(t));
        int j = arity - 1;
        while (j >= 0 && t[static_cast<std::size_t>(j)] == n - 1) t[static_cast<std::size_t>(j--)] = 0;
        if (j < 0) return;
        ++t[static_cast<std::size_t>(j)];
    }
}

/// Visits every k-subset of {0..n-1} as an ascending list, in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        visit(std::span<const int>(c));
        int j = k - 1;
        while (j >= 0 && c[static_cast<std::size_t>(j)] == n - k + j) --j;
        if (j < 0) return;
        ++c[static_cast<std::size_t>(j)];
        for (int i = j + 1; i < k; ++i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i - 1)] + 1;
    }
}

inline std::vector<int> identity_permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace mono
