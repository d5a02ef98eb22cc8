#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "whirl/statistics.hpp"

namespace whirl {

// Toggles on the cardinality band L_r(n) = { X subset of [n] : r <= #X <= n-r },
// and the bridge to whirling Inj_{n-r}(n,2): S(f) = { i : f(i) = 1 }, with
// t_i o S = S o w_i.

using Subset = std::uint32_t;  // bit e-1 set <=> e in X

bool in_band(int n, int r, Subset x);

// Insert e if absent and the ceiling allows, remove if present and the floor
// allows, otherwise leave x alone.
Subset toggle_at(int n, int r, Subset x, int e);

Subset word_to_subset(const FunctionWord& f);
FunctionWord subset_to_word(int n, Subset x);

std::string subset_str(int n, Subset x);  // "{1,3}"
std::string subset_hex(int n, Subset x);

struct ToggleOrbitRow {
    Subset rep = 0;  // numerically least bitmask in the orbit
    std::uint64_t length = 0;
    std::vector<long long> sizes;  // cardinalities along the orbit
    Rational average;
};

struct ToggleReport {
    int n = 0;
    int r = 0;
    WhirlOrder order;
    std::vector<ToggleOrbitRow> rows;
    bool homomesic = false;
    Rational average;
};

ToggleReport check_toggle_homomesy(int n, int r, const WhirlOrder& order);

}  // namespace whirl
