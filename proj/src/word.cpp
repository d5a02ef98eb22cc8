#include "whirl/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace whirl {

// ---------------------------------------------------------------------------
// FunctionWord
// ---------------------------------------------------------------------------

FunctionWord::FunctionWord(int n, int k, std::vector<int> values)
    : n_(n), k_(k), values_(std::move(values)) {
    if (n < 1 || k < 1) throw OutOfRange("word shape must be positive, got n=" +
                                         std::to_string(n) + " k=" + std::to_string(k));
    if (values_.size() != static_cast<size_t>(n))
        throw LengthMismatch("expected " + std::to_string(n) + " entries, got " +
                             std::to_string(values_.size()));
    for (int v : values_)
        if (v < 1 || v > k)
            throw OutOfRange("entry " + std::to_string(v) + " outside [1," +
                             std::to_string(k) + "]");
}

int FunctionWord::operator()(int i) const {
    if (i < 1 || i > n_) throw IndexOutOfRange("index " + std::to_string(i) +
                                               " outside [1," + std::to_string(n_) + "]");
    return values_[i - 1];
}

std::string format_values(std::span<const int> values, int k) {
    std::string out;
    if (k <= 9) {
        out.reserve(values.size());
        for (int v : values) out.push_back(static_cast<char>('0' + v));
    } else {
        for (size_t i = 0; i < values.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(values[i]);
        }
    }
    return out;
}

std::string FunctionWord::str() const { return format_values(values_, k_); }

FunctionWord FunctionWord::parse(std::string_view text, int n, int k) {
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            std::string_view tok = text.substr(pos, next == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : next - pos);
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || p != tok.data() + tok.size())
                throw ParseError("bad word entry '" + std::string(tok) + "'");
            values.push_back(v);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw ParseError(std::string("bad word digit '") + c + "'");
            values.push_back(c - '0');
        }
    }
    return FunctionWord(n, k, std::move(values));
}

FunctionWord make_word(int n, int k, std::vector<int> values) {
    return FunctionWord(n, k, std::move(values));
}

// ---------------------------------------------------------------------------
// FamilySpec
// ---------------------------------------------------------------------------

FamilySpec::FamilySpec(FamilyKind kind, int n, int k, int m)
    : kind_(kind), n_(n), k_(k), m_(m) {
    if (n < 1) throw OutOfRange("family needs n >= 1");
    if (k < 1) throw OutOfRange("family needs k >= 1");
    if (has_m() && m < 1) throw OutOfRange("family needs m >= 1");
}

FamilySpec FamilySpec::inj(int m, int n, int k) { return FamilySpec(FamilyKind::InjM, n, k, m); }
FamilySpec FamilySpec::sur(int m, int n, int k) { return FamilySpec(FamilyKind::SurM, n, k, m); }
FamilySpec FamilySpec::park(int n) { return FamilySpec(FamilyKind::Park, n, n, 0); }
FamilySpec FamilySpec::op(int n, int k) { return FamilySpec(FamilyKind::OP, n, k, 0); }

FamilySpec FamilySpec::opinj(int n, int k) {
    if (n > k) throw OutOfRange("strictly increasing words need n <= k");
    return FamilySpec(FamilyKind::OPInj, n, k, 0);
}

FamilySpec FamilySpec::rg(int n, int k) {
    if (k > n) throw OutOfRange("restricted growth words need k <= n");
    return FamilySpec(FamilyKind::RGnk, n, k, 0);
}
FamilySpec FamilySpec::rg(int n) { return FamilySpec(FamilyKind::RGn, n, n, 0); }

FamilySpec FamilySpec::rg_nc(int n, int k) {
    if (k > n) throw OutOfRange("restricted growth words need k <= n");
    return FamilySpec(FamilyKind::RGncNK, n, k, 0);
}
FamilySpec FamilySpec::rg_nc(int n) { return FamilySpec(FamilyKind::RGncN, n, n, 0); }

std::string FamilySpec::str() const {
    std::ostringstream os;
    switch (kind_) {
        case FamilyKind::InjM: os << "inj:m=" << m_ << ",n=" << n_ << ",k=" << k_; break;
        case FamilyKind::SurM: os << "sur:m=" << m_ << ",n=" << n_ << ",k=" << k_; break;
        case FamilyKind::Park: os << "park:n=" << n_; break;
        case FamilyKind::OP: os << "op:n=" << n_ << ",k=" << k_; break;
        case FamilyKind::OPInj: os << "opinj:n=" << n_ << ",k=" << k_; break;
        case FamilyKind::RGnk: os << "rg:n=" << n_ << ",k=" << k_; break;
        case FamilyKind::RGn: os << "rg:n=" << n_; break;
        case FamilyKind::RGncNK: os << "rgnc:n=" << n_ << ",k=" << k_; break;
        case FamilyKind::RGncN: os << "rgnc:n=" << n_; break;
    }
    return os.str();
}

namespace {

struct DescriptorFields {
    bool has_n = false, has_k = false, has_m = false;
    int n = 0, k = 0, m = 0;
};

DescriptorFields parse_fields(std::string_view rest, std::string_view whole) {
    DescriptorFields f;
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t next = rest.find(',', pos);
        std::string_view item =
            rest.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("bad family descriptor '" + std::string(whole) + "'");
        std::string_view key = item.substr(0, eq);
        std::string_view val = item.substr(eq + 1);
        int value = 0;
        auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), value);
        if (ec != std::errc() || p != val.data() + val.size())
            throw ParseError("bad value in family descriptor '" + std::string(whole) + "'");
        if (key == "n") { f.has_n = true; f.n = value; }
        else if (key == "k") { f.has_k = true; f.k = value; }
        else if (key == "m") { f.has_m = true; f.m = value; }
        else throw ParseError("unknown field '" + std::string(key) + "' in family descriptor");
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return f;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view descriptor) {
    size_t colon = descriptor.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("family descriptor needs 'name:fields', got '" +
                         std::string(descriptor) + "'");
    std::string_view name = descriptor.substr(0, colon);
    DescriptorFields f = parse_fields(descriptor.substr(colon + 1), descriptor);

    auto need = [&](bool cond, const char* what) {
        if (!cond) throw ParseError("family '" + std::string(name) + "' needs " + what);
    };
    auto forbid_m = [&]() {
        if (f.has_m) throw ParseError("family '" + std::string(name) + "' takes no m");
    };

    if (name == "inj" || name == "sur") {
        need(f.has_m && f.has_n && f.has_k, "m, n and k");
        return name == "inj" ? inj(f.m, f.n, f.k) : sur(f.m, f.n, f.k);
    }
    if (name == "park") {
        need(f.has_n, "n");
        forbid_m();
        if (f.has_k && f.k != f.n) throw ParseError("parking words force k=n");
        return park(f.n);
    }
    if (name == "op" || name == "opinj") {
        need(f.has_n && f.has_k, "n and k");
        forbid_m();
        return name == "op" ? op(f.n, f.k) : opinj(f.n, f.k);
    }
    if (name == "rg" || name == "rgnc") {
        need(f.has_n, "n");
        forbid_m();
        if (name == "rg") return f.has_k ? rg(f.n, f.k) : rg(f.n);
        return f.has_k ? rg_nc(f.n, f.k) : rg_nc(f.n);
    }
    throw ParseError("unknown family '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

namespace {

bool counts_within(std::span<const int> values, int k, int m, bool at_most) {
    // at_most: every value occurs <= m times; otherwise every value in [k]
    // occurs >= m times.
    static thread_local std::vector<int> counts;
    counts.assign(k + 1, 0);
    for (int v : values) ++counts[v];
    if (at_most) {
        for (int v = 1; v <= k; ++v)
            if (counts[v] > m) return false;
    } else {
        for (int v = 1; v <= k; ++v)
            if (counts[v] < m) return false;
    }
    return true;
}

bool is_parking(std::span<const int> values) {
    int n = static_cast<int>(values.size());
    static thread_local std::vector<int> counts;
    counts.assign(n + 1, 0);
    for (int v : values) ++counts[v];
    int below = 0;
    for (int i = 1; i <= n; ++i) {
        below += counts[i];
        if (below < i) return false;  // fewer than i entries <= i
    }
    return true;
}

bool is_weakly_increasing(std::span<const int> values) {
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[i - 1]) return false;
    return true;
}

bool is_strictly_increasing(std::span<const int> values) {
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1]) return false;
    return true;
}

// Restricted growth: values used are 1..max and each value's first occurrence
// precedes the next value's.  exact_k additionally pins the maximum.
bool is_rg(std::span<const int> values, int exact_k) {
    int maxv = 0;
    for (int v : values) {
        if (v > maxv + 1) return false;  // v occurs before v-1 ever did
        if (v == maxv + 1) maxv = v;
    }
    return exact_k == 0 || maxv == exact_k;
}

// Crossing test: some subsequence a,b,a,b with a != b.  O(n*k) scan keeping,
// per ordered pair, whether "a..b" and "a..b..a" have been seen.
bool has_crossing(std::span<const int> values, int k) {
    static thread_local std::vector<char> ab, aba, seen;
    ab.assign((k + 1) * (k + 1), 0);
    aba.assign((k + 1) * (k + 1), 0);
    seen.assign(k + 1, 0);
    auto at = [k](std::vector<char>& t, int a, int b) -> char& { return t[a * (k + 1) + b]; };
    for (int v : values) {
        for (int a = 1; a <= k; ++a) {
            if (a == v || !seen[a]) continue;
            if (at(aba, a, v)) return true;       // a,v,a then this v
            if (at(ab, v, a)) at(aba, v, a) = 1;  // v,a then this v
            at(ab, a, v) = 1;
        }
        seen[v] = 1;
    }
    return false;
}

}  // namespace

bool is_member_values(const FamilySpec& family, std::span<const int> values) {
    if (values.size() != static_cast<size_t>(family.n()))
        throw ShapeMismatch("word length " + std::to_string(values.size()) +
                            " vs family n=" + std::to_string(family.n()));
    switch (family.kind()) {
        case FamilyKind::InjM:
            return counts_within(values, family.k(), family.m(), /*at_most=*/true);
        case FamilyKind::SurM:
            return counts_within(values, family.k(), family.m(), /*at_most=*/false);
        case FamilyKind::Park:
            return is_parking(values);
        case FamilyKind::OP:
            return is_weakly_increasing(values);
        case FamilyKind::OPInj:
            return is_strictly_increasing(values);
        case FamilyKind::RGnk:
            return is_rg(values, family.k());
        case FamilyKind::RGn:
            return is_rg(values, 0);
        case FamilyKind::RGncNK:
            return is_rg(values, family.k()) && !has_crossing(values, family.k());
        case FamilyKind::RGncN:
            return is_rg(values, 0) && !has_crossing(values, family.k());
    }
    return false;
}

bool is_member(const FamilySpec& family, const FunctionWord& f) {
    if (f.n() != family.n() || f.k() != family.k())
        throw ShapeMismatch("word shape (" + std::to_string(f.n()) + "," +
                            std::to_string(f.k()) + ") vs family (" +
                            std::to_string(family.n()) + "," + std::to_string(family.k()) + ")");
    return is_member_values(family, f.values());
}

// ---------------------------------------------------------------------------
// Enumeration by direct filtration, lexicographic odometer order.
// ---------------------------------------------------------------------------

std::uint64_t candidate_count(int n, int k, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > cap / static_cast<std::uint64_t>(k)) return cap + 1;
        total *= static_cast<std::uint64_t>(k);
    }
    return total;
}

void for_each_member(const FamilySpec& family,
                     const std::function<void(std::span<const int>)>& fn,
                     const EnumerationLimits& limits) {
    const int n = family.n();
    const int k = family.k();
    if (candidate_count(n, k, limits.max_candidates) > limits.max_candidates)
        throw SizeLimit("candidate space " + std::to_string(k) + "^" + std::to_string(n) +
                        " exceeds the ceiling " + std::to_string(limits.max_candidates));
    std::vector<int> word(n, 1);
    while (true) {
        if (is_member_values(family, word)) fn(word);
        int pos = n - 1;
        while (pos >= 0 && word[pos] == k) word[pos--] = 1;
        if (pos < 0) break;
        ++word[pos];
    }
}

FamilyCensus enumerate_family(const FamilySpec& family, const EnumerationLimits& limits) {
    FamilyCensus census{family, 0, {}};
    for_each_member(family, [&](std::span<const int> w) {
        if (census.cardinality == limits.max_census)
            throw SizeLimit("census exceeds the ceiling " + std::to_string(limits.max_census));
        ++census.cardinality;
        census.words.emplace_back(family.n(), family.k(), std::vector<int>(w.begin(), w.end()));
    }, limits);
    return census;
}

}  // namespace whirl
