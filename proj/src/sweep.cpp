#include "whirl/sweep.hpp"

#include <numeric>
#include <sstream>

namespace whirl {

namespace {

FunctionWord word_from(std::span<const int> w, const FamilySpec& family) {
    return FunctionWord(family.n(), family.k(), std::vector<int>(w.begin(), w.end()));
}

// Checks eta_j n/k-mesic for every j (and optionally the orbit-length
// divisibility by k/gcd(n,k)) across one (family, order) instance.
void check_eta_instance(const FamilySpec& family, const WhirlOrder& order,
                        const std::vector<std::uint64_t>& ranks, bool check_divisibility,
                        SweepReport& report) {
    const int n = family.n();
    const int k = family.k();
    const std::uint64_t divisor = static_cast<std::uint64_t>(k / std::gcd(n, k));
    std::vector<long long> sums(k + 1, 0);
    std::vector<int> rep;
    std::uint64_t orbits = 0;

    OrbitVisitor visitor;
    visitor.on_word = [&](std::span<const int> w) {
        for (int v : w) ++sums[v];
    };
    visitor.on_orbit_end = [&](std::span<const int> r, std::uint64_t length) {
        ++orbits;
        for (int j = 1; j <= k; ++j) {
            if (Rational(sums[j], static_cast<long long>(length)) != Rational(n, k)) {
                std::ostringstream detail;
                detail << "eta:j=" << j << " totals " << sums[j] << " over length " << length
                       << ", average " << rational_str(Rational(sums[j], (long long)length))
                       << " != " << rational_str(Rational(n, k));
                report.counterexamples.push_back(
                    {family, order, word_from(r, family), detail.str()});
            }
            sums[j] = 0;
        }
        if (check_divisibility && length % divisor != 0) {
            std::ostringstream detail;
            detail << "orbit length " << length << " not a multiple of " << divisor;
            report.counterexamples.push_back({family, order, word_from(r, family), detail.str()});
        }
    };
    for_each_orbit_ranked(family, order, ranks, visitor);
    ++report.instances;
    report.orbits += orbits;
    std::ostringstream line;
    line << family.str() << " order=" << order.str() << " orbits=" << orbits;
    report.instance_lines.push_back(line.str());
}

}  // namespace

SweepReport sweep_surm(int max_n, const EnumerationLimits& limits) {
    SweepReport report;
    report.name = "surm-eta";
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int m = 1; m * k <= n; ++m) {
                FamilySpec family = FamilySpec::sur(m, n, k);
                auto ranks = member_ranks(family, limits);
                check_eta_instance(family, WhirlOrder::identity(n), ranks,
                                   /*check_divisibility=*/false, report);
            }
        }
    }
    return report;
}

SweepReport sweep_rgnc(int max_n, int random_orders, std::uint64_t seed,
                       const EnumerationLimits& limits) {
    SweepReport report;
    report.name = "rgnc-ind";
    report.seed = random_orders > 0 ? seed : 0;
    OrderSampler sampler(seed);

    for (int n = 2; n <= max_n; ++n) {
        std::vector<FamilySpec> families;
        families.push_back(FamilySpec::rg_nc(n));
        for (int k = 1; k <= n; ++k) families.push_back(FamilySpec::rg_nc(n, k));

        std::vector<WhirlOrder> orders;
        orders.push_back(WhirlOrder::identity_tail(n));
        for (int t = 0; t < random_orders; ++t)
            orders.push_back(sampler.random_order(n, /*tail_only=*/true));

        for (const FamilySpec& family : families) {
            auto ranks = member_ranks(family, limits);
            for (const WhirlOrder& order : orders) {
                long long first = 0, last = 0;
                std::uint64_t orbits = 0;
                OrbitVisitor visitor;
                visitor.on_word = [&](std::span<const int> w) {
                    first += (w[1] == 1);
                    last += (w[n - 1] == 1);
                };
                visitor.on_orbit_end = [&](std::span<const int> r, std::uint64_t length) {
                    ++orbits;
                    if (first != last) {
                        std::ostringstream detail;
                        detail << "ind-diff:i=2,j=" << n << " totals " << first << " vs " << last
                               << " over length " << length;
                        report.counterexamples.push_back(
                            {family, order, word_from(r, family), detail.str()});
                    }
                    first = last = 0;
                };
                for_each_orbit_ranked(family, order, ranks, visitor);
                ++report.instances;
                report.orbits += orbits;
                std::ostringstream line;
                line << family.str() << " order=" << order.str() << " orbits=" << orbits;
                report.instance_lines.push_back(line.str());
            }
        }
    }
    return report;
}

SweepReport sweep_injsur(int max_n, int max_k, int random_orders, std::uint64_t seed,
                         const EnumerationLimits& limits) {
    SweepReport report;
    report.name = "injsur-eta-divisibility";
    report.seed = random_orders > 0 ? seed : 0;
    OrderSampler sampler(seed);

    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= max_k; ++k) {
            if (candidate_count(n, k, limits.max_census) > limits.max_census) continue;

            std::vector<WhirlOrder> orders;
            orders.push_back(WhirlOrder::identity(n));
            orders.push_back(WhirlOrder::reversed(n));
            for (int t = 0; t < random_orders; ++t)
                orders.push_back(sampler.random_order(n));

            std::vector<FamilySpec> families;
            for (int m = (n + k - 1) / k; m <= n; ++m) families.push_back(FamilySpec::inj(m, n, k));
            if (k <= n) families.push_back(FamilySpec::sur(1, n, k));

            for (const FamilySpec& family : families) {
                auto ranks = member_ranks(family, limits);
                for (const WhirlOrder& order : orders)
                    check_eta_instance(family, order, ranks, /*check_divisibility=*/true, report);
            }
        }
    }
    return report;
}

}  // namespace whirl
