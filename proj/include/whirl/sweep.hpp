#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "whirl/statistics.hpp"

namespace whirl {

// ---------------------------------------------------------------------------
// Conjecture sweeps.  These REPORT; they never assume.  Counterexamples are
// listed verbatim so a failing instance can be replayed by hand.
// ---------------------------------------------------------------------------

struct SweepCounterexample {
    FamilySpec family;
    WhirlOrder order;
    FunctionWord rep;
    std::string detail;  // the statistic values that broke the claim
};

struct SweepReport {
    std::string name;
    std::uint64_t seed = 0;      // 0 when no random orders were used
    std::uint64_t instances = 0; // (family, order) pairs checked
    std::uint64_t orbits = 0;
    std::vector<SweepCounterexample> counterexamples;
    std::vector<std::string> instance_lines;  // one verdict per instance

    bool clean() const { return counterexamples.empty(); }
};

// eta_j is n/k-mesic on Sur_m(n,k) under the left-to-right order: all
// (m, n, k) with m*k <= n <= max_n.
SweepReport sweep_surm(int max_n, const EnumerationLimits& limits = {});

// I_{2->1} - I_{n->1} is 0-mesic on the noncrossing restricted-growth
// families: all n <= max_n, k in [n], identity plus random_orders seeded
// orders over {2..n}.
SweepReport sweep_rgnc(int max_n, int random_orders, std::uint64_t seed,
                       const EnumerationLimits& limits = {});

// eta_j is n/k-mesic and every orbit length is a multiple of k/gcd(n,k) on
// Inj_m(n,k) and Sur_1(n,k): all n <= max_n with k^n <= limits.max_census and
// k <= max_k, identity + reversal + random_orders seeded orders.
SweepReport sweep_injsur(int max_n, int max_k, int random_orders, std::uint64_t seed,
                         const EnumerationLimits& limits = {});

}  // namespace whirl
