#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whirl/orbit.hpp"

namespace whirl {

// Orbit averages are exact; homomesy is an identity, not an approximation.
using Rational = boost::rational<long long>;

std::string rational_str(const Rational& r);

// ---------------------------------------------------------------------------
// StatisticSpec: integer-valued word statistics.
// ---------------------------------------------------------------------------

class StatisticSpec {
public:
    enum class Kind {
        Eta,            // #f^{-1}({j})
        EtaDiff,        // Eta(a) - Eta(b)
        Indicator,      // 1 if f(i) = v else 0
        IndDiff,        // Indicator(a,1) - Indicator(b,1)
        SymmetricSum,   // f(j) + f(n+1-j)
        RGCombo,        // C(k,2)*f(2) - f(n)
        ValueCountDiff, // #{j | f(j)=r} - #{j | f(j)=k+1-r}
        Cardinality,    // #{j | f(j)=1}
    };

    static StatisticSpec eta(int j);
    static StatisticSpec eta_diff(int i, int j);
    static StatisticSpec indicator(int i, int v);
    static StatisticSpec ind_diff(int i, int j);
    static StatisticSpec symmetric_sum(int j);
    static StatisticSpec rg_combo();
    static StatisticSpec value_count_diff(int r);
    static StatisticSpec cardinality();

    Kind kind() const { return kind_; }
    int a() const { return a_; }
    int b() const { return b_; }

    // Descriptor: "eta:j=2", "eta-diff:i=2,j=5", "ind:i=3,v=1",
    // "ind-diff:i=2,j=5", "sym:j=1", "rgcombo", "vcd:r=2", "card".
    std::string str() const;
    static StatisticSpec parse(std::string_view text);

    // Throws ShapeMismatch if the parameters do not fit shape (n,k).
    void validate_shape(int n, int k) const;

private:
    StatisticSpec(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}
    Kind kind_;
    int a_;
    int b_;
};

long long evaluate_statistic(const StatisticSpec& stat, const FunctionWord& f);
long long evaluate_statistic_values(const StatisticSpec& stat, std::span<const int> values,
                                    int n, int k);

Rational orbit_average(const Orbit& orbit, const StatisticSpec& stat);

// ---------------------------------------------------------------------------
// HomomesyReport.
// ---------------------------------------------------------------------------

struct OrbitReportRow {
    FunctionWord rep;
    std::uint64_t length = 0;
    std::vector<long long> values;  // statistic along the orbit, from rep
    Rational average;
};

struct HomomesyReport {
    FamilySpec family;
    WhirlOrder order;
    StatisticSpec statistic;
    std::vector<OrbitReportRow> rows;  // sorted by representative
    bool homomesic = false;
    Rational average;                              // meaningful when homomesic
    std::optional<std::pair<size_t, size_t>> witnesses;  // row indices otherwise
};

HomomesyReport check_homomesy(const FamilySpec& family, const WhirlOrder& order,
                              const StatisticSpec& stat,
                              const EnumerationLimits& limits = {});

}  // namespace whirl
