#include "whirl/toggles.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace whirl {

bool in_band(int n, int r, Subset x) {
    int size = std::popcount(x);
    return r <= size && size <= n - r;
}

namespace {

void check_band_args(int n, int r) {
    if (n < 1 || n > 31) throw OutOfRange("subset ground set needs 1 <= n <= 31");
    if (r < 0 || 2 * r > n) throw OutOfRange("band needs 0 <= r <= n/2");
}

}  // namespace

Subset toggle_at(int n, int r, Subset x, int e) {
    check_band_args(n, r);
    if (e < 1 || e > n) throw IndexOutOfRange("toggle element outside [1,n]");
    if (!in_band(n, r, x)) throw NotMember("subset outside the cardinality band");
    Subset bit = Subset{1} << (e - 1);
    int size = std::popcount(x);
    if (!(x & bit)) return size <= n - r - 1 ? (x | bit) : x;
    return size >= r + 1 ? (x & ~bit) : x;
}

Subset word_to_subset(const FunctionWord& f) {
    if (f.k() != 2) throw ShapeMismatch("the subset bridge needs codomain [2]");
    Subset x = 0;
    for (int i = 1; i <= f.n(); ++i)
        if (f(i) == 1) x |= Subset{1} << (i - 1);
    return x;
}

FunctionWord subset_to_word(int n, Subset x) {
    std::vector<int> values(n, 2);
    for (int i = 0; i < n; ++i)
        if (x & (Subset{1} << i)) values[i] = 1;
    return FunctionWord(n, 2, std::move(values));
}

std::string subset_str(int n, Subset x) {
    std::string out = "{";
    bool first = true;
    for (int e = 1; e <= n; ++e)
        if (x & (Subset{1} << (e - 1))) {
            if (!first) out += ",";
            out += std::to_string(e);
            first = false;
        }
    return out + "}";
}

std::string subset_hex(int n, Subset x) {
    int digits = (n + 3) / 4;
    std::string body;
    for (int d = digits - 1; d >= 0; --d) {
        int nibble = (x >> (4 * d)) & 0xF;
        body += "0123456789abcdef"[nibble];
    }
    return "0x" + body;
}

ToggleReport check_toggle_homomesy(int n, int r, const WhirlOrder& order) {
    check_band_args(n, r);
    if (order.n() != n || !order.full_domain())
        throw IndexOutOfRange("toggle order must permute [1.." + std::to_string(n) + "]");

    ToggleReport report{n, r, order, {}, true, Rational(0)};
    Subset all = (n == 31) ? 0x7fffffffu : ((Subset{1} << n) - 1);
    std::vector<char> seen(static_cast<size_t>(all) + 1, 0);

    for (Subset start = 0; start <= all; ++start) {
        if (seen[start] || !in_band(n, r, start)) continue;
        ToggleOrbitRow row{start, 0, {}, Rational(0)};
        long long total = 0;
        Subset x = start;
        do {
            seen[x] = 1;
            int size = std::popcount(x);
            row.sizes.push_back(size);
            total += size;
            for (int i : order.sequence()) x = toggle_at(n, r, x, i);
        } while (x != start);
        row.length = row.sizes.size();
        row.average = Rational(total, static_cast<long long>(row.length));
        report.rows.push_back(std::move(row));
    }

    if (!report.rows.empty()) {
        report.average = report.rows.front().average;
        for (const auto& row : report.rows)
            if (row.average != report.average) {
                report.homomesic = false;
                break;
            }
    }
    return report;
}

}  // namespace whirl
