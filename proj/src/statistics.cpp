#include "whirl/statistics.hpp"

#include <algorithm>
#include <charconv>

namespace whirl {

std::string rational_str(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------------------
// StatisticSpec
// ---------------------------------------------------------------------------

StatisticSpec StatisticSpec::eta(int j) { return {Kind::Eta, j, 0}; }
StatisticSpec StatisticSpec::eta_diff(int i, int j) { return {Kind::EtaDiff, i, j}; }
StatisticSpec StatisticSpec::indicator(int i, int v) { return {Kind::Indicator, i, v}; }
StatisticSpec StatisticSpec::ind_diff(int i, int j) { return {Kind::IndDiff, i, j}; }
StatisticSpec StatisticSpec::symmetric_sum(int j) { return {Kind::SymmetricSum, j, 0}; }
StatisticSpec StatisticSpec::rg_combo() { return {Kind::RGCombo, 0, 0}; }
StatisticSpec StatisticSpec::value_count_diff(int r) { return {Kind::ValueCountDiff, r, 0}; }
StatisticSpec StatisticSpec::cardinality() { return {Kind::Cardinality, 0, 0}; }

std::string StatisticSpec::str() const {
    switch (kind_) {
        case Kind::Eta: return "eta:j=" + std::to_string(a_);
        case Kind::EtaDiff: return "eta-diff:i=" + std::to_string(a_) + ",j=" + std::to_string(b_);
        case Kind::Indicator:
            return "ind:i=" + std::to_string(a_) + ",v=" + std::to_string(b_);
        case Kind::IndDiff: return "ind-diff:i=" + std::to_string(a_) + ",j=" + std::to_string(b_);
        case Kind::SymmetricSum: return "sym:j=" + std::to_string(a_);
        case Kind::RGCombo: return "rgcombo";
        case Kind::ValueCountDiff: return "vcd:r=" + std::to_string(a_);
        case Kind::Cardinality: return "card";
    }
    return {};
}

namespace {

int parse_int_field(std::string_view text, std::string_view key) {
    std::string needle = std::string(key) + "=";
    size_t pos = text.find(needle);
    if (pos == std::string_view::npos)
        throw ParseError("statistic descriptor '" + std::string(text) + "' needs field '" +
                         std::string(key) + "'");
    size_t start = pos + needle.size();
    size_t end = text.find(',', start);
    std::string_view val =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    int v = 0;
    auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || p != val.data() + val.size())
        throw ParseError("bad number in statistic descriptor '" + std::string(text) + "'");
    return v;
}

}  // namespace

StatisticSpec StatisticSpec::parse(std::string_view text) {
    std::string_view name = text.substr(0, text.find(':'));
    if (name == "eta") return eta(parse_int_field(text, "j"));
    if (name == "eta-diff") return eta_diff(parse_int_field(text, "i"), parse_int_field(text, "j"));
    if (name == "ind") return indicator(parse_int_field(text, "i"), parse_int_field(text, "v"));
    if (name == "ind-diff") return ind_diff(parse_int_field(text, "i"), parse_int_field(text, "j"));
    if (name == "sym") return symmetric_sum(parse_int_field(text, "j"));
    if (name == "rgcombo") return rg_combo();
    if (name == "vcd") return value_count_diff(parse_int_field(text, "r"));
    if (name == "card") return cardinality();
    throw ParseError("unknown statistic '" + std::string(text) + "'");
}

void StatisticSpec::validate_shape(int n, int k) const {
    auto need = [](bool ok, const std::string& what) {
        if (!ok) throw ShapeMismatch("statistic parameter " + what);
    };
    switch (kind_) {
        case Kind::Eta:
            need(a_ >= 1 && a_ <= k, "j outside [1,k]");
            break;
        case Kind::EtaDiff:
            need(a_ >= 1 && a_ <= k && b_ >= 1 && b_ <= k, "i,j outside [1,k]");
            break;
        case Kind::Indicator:
            need(a_ >= 1 && a_ <= n, "i outside [1,n]");
            need(b_ >= 1 && b_ <= k, "v outside [1,k]");
            break;
        case Kind::IndDiff:
            need(a_ >= 1 && a_ <= n && b_ >= 1 && b_ <= n, "i,j outside [1,n]");
            break;
        case Kind::SymmetricSum:
            need(a_ >= 1 && a_ <= n, "j outside [1,n]");
            break;
        case Kind::RGCombo:
            need(n >= 2, "needs n >= 2");
            break;
        case Kind::ValueCountDiff:
            need(a_ >= 1 && a_ <= k, "r outside [1,k]");
            break;
        case Kind::Cardinality:
            break;
    }
}

long long evaluate_statistic_values(const StatisticSpec& stat, std::span<const int> values,
                                    int n, int k) {
    auto count_value = [&](int v) {
        long long c = 0;
        for (int x : values) c += (x == v);
        return c;
    };
    switch (stat.kind()) {
        case StatisticSpec::Kind::Eta:
            return count_value(stat.a());
        case StatisticSpec::Kind::EtaDiff:
            return count_value(stat.a()) - count_value(stat.b());
        case StatisticSpec::Kind::Indicator:
            return values[stat.a() - 1] == stat.b() ? 1 : 0;
        case StatisticSpec::Kind::IndDiff:
            return (values[stat.a() - 1] == 1 ? 1 : 0) - (values[stat.b() - 1] == 1 ? 1 : 0);
        case StatisticSpec::Kind::SymmetricSum:
            return values[stat.a() - 1] + values[n - stat.a()];
        case StatisticSpec::Kind::RGCombo:
            return static_cast<long long>(k) * (k - 1) / 2 * values[1] - values[n - 1];
        case StatisticSpec::Kind::ValueCountDiff:
            return count_value(stat.a()) - count_value(k + 1 - stat.a());
        case StatisticSpec::Kind::Cardinality:
            return count_value(1);
    }
    return 0;
}

long long evaluate_statistic(const StatisticSpec& stat, const FunctionWord& f) {
    stat.validate_shape(f.n(), f.k());
    return evaluate_statistic_values(stat, f.values(), f.n(), f.k());
}

// ---------------------------------------------------------------------------
// Averages and reports
// ---------------------------------------------------------------------------

Rational orbit_average(const Orbit& orbit, const StatisticSpec& stat) {
    stat.validate_shape(orbit.family.n(), orbit.family.k());
    long long total = 0;
    for (const FunctionWord& w : orbit.words)
        total += evaluate_statistic_values(stat, w.values(), w.n(), w.k());
    return Rational(total, static_cast<long long>(orbit.length()));
}

HomomesyReport check_homomesy(const FamilySpec& family, const WhirlOrder& order,
                              const StatisticSpec& stat, const EnumerationLimits& limits) {
    stat.validate_shape(family.n(), family.k());
    HomomesyReport report{family, order.normalized_for(family), stat, {}, true, Rational(0), {}};

    OrbitReportRow row{FunctionWord(family.n(), family.k(),
                                    std::vector<int>(family.n(), 1)),
                       0, {}, Rational(0)};
    bool row_open = false;
    OrbitVisitor visitor;
    visitor.on_word = [&](std::span<const int> w) {
        if (!row_open) {
            row.rep = FunctionWord(family.n(), family.k(), std::vector<int>(w.begin(), w.end()));
            row.values.clear();
            row_open = true;
        }
        row.values.push_back(evaluate_statistic_values(stat, w, family.n(), family.k()));
    };
    visitor.on_orbit_end = [&](std::span<const int>, std::uint64_t length) {
        row.length = length;
        long long total = 0;
        for (long long v : row.values) total += v;
        row.average = Rational(total, static_cast<long long>(length));
        report.rows.push_back(row);
        row_open = false;
    };
    for_each_orbit(family, order, visitor, limits);

    if (!report.rows.empty()) {
        report.average = report.rows.front().average;
        for (size_t i = 1; i < report.rows.size(); ++i) {
            if (report.rows[i].average != report.average) {
                report.homomesic = false;
                report.witnesses = {size_t{0}, i};
                break;
            }
        }
    }
    return report;
}

}  // namespace whirl
