#pragma once

// Test-side oracles, independent of the library code they check.

#include <cstdint>
#include <vector>

namespace oracles {

// Stirling numbers of the second kind via S(n,k) = S(n-1,k-1) + k*S(n-1,k).
inline std::uint64_t stirling2(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n <= 0 || k <= 0 || k > n) return 0;
    std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            s[i][j] = s[i - 1][j - 1] + static_cast<std::uint64_t>(j) * s[i - 1][j];
    return s[n][k];
}

// Bell numbers as row sums of Stirling numbers.
inline std::uint64_t bell(int n) {
    std::uint64_t total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

// Catalan numbers via C(0)=1, C(n+1) = sum C(i)C(n-i).
inline std::uint64_t catalan(int n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
    return c[n];
}

inline std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace oracles
