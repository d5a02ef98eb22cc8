#include "whirl/whirl.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace whirl {

// ---------------------------------------------------------------------------
// WhirlOrder
// ---------------------------------------------------------------------------

WhirlOrder::WhirlOrder(int n, std::vector<int> sequence) : n_(n), seq_(std::move(sequence)) {
    if (n < 1) throw OutOfRange("order needs n >= 1");
    if (seq_.empty()) throw IndexOutOfRange("order sequence is empty");
    std::vector<int> sorted = seq_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw IndexOutOfRange("order repeats index " + std::to_string(sorted[i]));
    bool full = sorted.size() == static_cast<size_t>(n) && sorted.front() == 1 && sorted.back() == n;
    bool tail = n >= 2 && sorted.size() == static_cast<size_t>(n - 1) && sorted.front() == 2 &&
                sorted.back() == n;
    if (!full && !tail)
        throw IndexOutOfRange("order must permute [1.." + std::to_string(n) + "] or [2.." +
                              std::to_string(n) + "]");
}

WhirlOrder WhirlOrder::identity(int n) {
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 1);
    return WhirlOrder(n, std::move(seq));
}

WhirlOrder WhirlOrder::reversed(int n) {
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = n - i;
    return WhirlOrder(n, std::move(seq));
}

WhirlOrder WhirlOrder::identity_tail(int n) {
    if (n < 2) throw OutOfRange("tail order needs n >= 2");
    std::vector<int> seq(n - 1);
    std::iota(seq.begin(), seq.end(), 2);
    return WhirlOrder(n, std::move(seq));
}

void WhirlOrder::validate_for(const FamilySpec& family) const {
    if (n_ != family.n())
        throw IndexOutOfRange("order over [" + std::to_string(n_) + "] vs family n=" +
                              std::to_string(family.n()));
    if (!full_domain() && !family.rg_like())
        throw IndexOutOfRange("this family requires an order over all of [1.." +
                              std::to_string(n_) + "]");
}

WhirlOrder WhirlOrder::normalized_for(const FamilySpec& family) const {
    validate_for(family);
    if (!family.rg_like() || !full_domain() || n_ < 2) return *this;
    std::vector<int> seq;
    seq.reserve(n_ - 1);
    for (int i : seq_)
        if (i != 1) seq.push_back(i);
    return WhirlOrder(n_, std::move(seq));
}

std::string WhirlOrder::str() const {
    if (std::is_sorted(seq_.begin(), seq_.end())) return "id";
    std::string out;
    for (size_t i = 0; i < seq_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(seq_[i]);
    }
    return out;
}

WhirlOrder WhirlOrder::parse(std::string_view text, int n) {
    if (text == "id") return identity(n);
    std::vector<int> seq;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(',', pos);
        std::string_view tok =
            text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw ParseError("bad order entry '" + std::string(tok) + "'");
        seq.push_back(v);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return WhirlOrder(n, std::move(seq));
}

// ---------------------------------------------------------------------------
// OrderSampler: splitmix64 + Fisher-Yates, fully pinned down so seeded runs
// reproduce across platforms.
// ---------------------------------------------------------------------------

std::uint64_t OrderSampler::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t OrderSampler::next_below(std::uint64_t bound) {
    return bound <= 1 ? 0 : next() % bound;
}

WhirlOrder OrderSampler::random_order(int n, bool tail_only) {
    std::vector<int> seq;
    for (int i = tail_only ? 2 : 1; i <= n; ++i) seq.push_back(i);
    for (size_t i = seq.size(); i > 1; --i)
        std::swap(seq[i - 1], seq[next_below(i)]);
    return WhirlOrder(n, std::move(seq));
}

// ---------------------------------------------------------------------------
// Whirling
// ---------------------------------------------------------------------------

namespace {

inline int cyc_succ(int v, int k) { return v == k ? 1 : v + 1; }
inline int cyc_pred(int v, int k) { return v == 1 ? k : v - 1; }

void check_index(const FamilySpec& family, int i) {
    if (i < 1 || i > family.n())
        throw IndexOutOfRange("whirl index " + std::to_string(i) + " outside [1," +
                              std::to_string(family.n()) + "]");
}

void check_member(const FamilySpec& family, const FunctionWord& f) {
    if (!is_member(family, f))
        throw NotMember("word " + f.str() + " is not in " + family.str());
}

}  // namespace

int whirl_value_generic(const FamilySpec& family, std::vector<int>& values, int i) {
    const int k = family.k();
    const int original = values[i - 1];
    for (int t = 1; t <= k; ++t) {
        int cand = original + t;
        if (cand > k) cand -= k;
        values[i - 1] = cand;
        if (is_member_values(family, values)) return cand;
    }
    // Unreachable: the k-th candidate is the original value and the caller
    // guarantees membership.
    values[i - 1] = original;
    throw Error("whirl exhausted all candidates at index " + std::to_string(i));
}

int whirl_value_inverse(const FamilySpec& family, std::vector<int>& values, int i) {
    const int k = family.k();
    const int original = values[i - 1];
    for (int t = 1; t <= k; ++t) {
        int cand = original - t;
        if (cand < 1) cand += k;
        values[i - 1] = cand;
        if (is_member_values(family, values)) return cand;
    }
    values[i - 1] = original;
    throw Error("inverse whirl exhausted all candidates at index " + std::to_string(i));
}

FunctionWord whirl_at(const FamilySpec& family, const FunctionWord& f, int i) {
    check_index(family, i);
    check_member(family, f);
    std::vector<int> values = f.values();
    whirl_value_generic(family, values, i);
    return FunctionWord(f.n(), f.k(), std::move(values));
}

FunctionWord whirl_inverse_at(const FamilySpec& family, const FunctionWord& f, int i) {
    check_index(family, i);
    check_member(family, f);
    std::vector<int> values = f.values();
    whirl_value_inverse(family, values, i);
    return FunctionWord(f.n(), f.k(), std::move(values));
}

// ---------------------------------------------------------------------------
// Closed forms.  Each is the family's one-step update rule; the generic loop
// above stays the semantic definition and the test suite holds them equal.
// ---------------------------------------------------------------------------

namespace {

int direct_park(std::span<const int> f, int i) {
    // Entries <= f(i) either outnumber f(i) (then f(i)+1 keeps the word
    // parking) or pin it exactly (then nothing above f(i) works and the value
    // wraps to 1).
    int v = f[i - 1];
    int below = 0;
    for (int x : f)
        if (x <= v) ++below;
    return below > v ? v + 1 : 1;
}

int direct_opinj(std::span<const int> f, int i, int k) {
    int n = static_cast<int>(f.size());
    int right = (i == n) ? k + 1 : f[i];      // sentinel f(n+1) = k+1
    int left = (i == 1) ? 0 : f[i - 2];       // sentinel f(0) = 0
    return f[i - 1] + 1 < right ? f[i - 1] + 1 : left + 1;
}

int direct_op(std::span<const int> f, int i, int k) {
    int n = static_cast<int>(f.size());
    int right = (i == n) ? k : f[i];          // sentinel f(n+1) = k
    int left = (i == 1) ? 1 : f[i - 2];       // sentinel f(0) = 1
    return f[i - 1] + 1 <= right ? f[i - 1] + 1 : left;
}

// Shared by the exact-k and free-k restricted growth rules.  top_rule is true
// for the exact-k family, whose maximum value k is frozen unless duplicated.
int direct_rg(std::span<const int> f, int i, int k, bool exact_k) {
    int v = f[i - 1];
    if (exact_k && v == k) {
        for (size_t h = 0; h < f.size(); ++h)
            if (static_cast<int>(h) != i - 1 && f[h] == k) return 1;
        return v;  // the only k; surjectivity pins it
    }
    for (int h = 0; h < i - 1; ++h)
        if (f[h] == v) return v + 1;  // not the first occurrence: free to grow
    // First occurrence of v.  It may drop to 1 only when another v stands
    // before the first v+1; otherwise it is pinned.
    int first_next = -1;
    for (size_t h = 0; h < f.size(); ++h)
        if (f[h] == v + 1) { first_next = static_cast<int>(h); break; }
    if (first_next < 0) return 1;  // no v+1 anywhere: nothing pins this v
    for (int h = 0; h < first_next; ++h)
        if (static_cast<int>(h) != i - 1 && f[h] == v) return 1;
    return v;
}

}  // namespace

int whirl_direct_value(const FamilySpec& family, std::span<const int> values, int i) {
    switch (family.kind()) {
        case FamilyKind::Park: return direct_park(values, i);
        case FamilyKind::OPInj: return direct_opinj(values, i, family.k());
        case FamilyKind::OP: return direct_op(values, i, family.k());
        case FamilyKind::RGnk: return direct_rg(values, i, family.k(), true);
        case FamilyKind::RGn: return direct_rg(values, i, family.k(), false);
        default:
            throw UnsupportedFamily("no closed-form whirl for " + family.str());
    }
}

FunctionWord whirl_direct_at(const FamilySpec& family, const FunctionWord& f, int i) {
    check_index(family, i);
    check_member(family, f);
    std::vector<int> values = f.values();
    values[i - 1] = whirl_direct_value(family, values, i);
    return FunctionWord(f.n(), f.k(), std::move(values));
}

// ---------------------------------------------------------------------------
// Orders
// ---------------------------------------------------------------------------

FunctionWord apply_order(const FamilySpec& family, const FunctionWord& f,
                         const WhirlOrder& order) {
    order.validate_for(family);
    check_member(family, f);
    std::vector<int> values = f.values();
    for (int i : order.sequence()) whirl_value_generic(family, values, i);
    return FunctionWord(f.n(), f.k(), std::move(values));
}

FunctionWord apply_order_inverse(const FamilySpec& family, const FunctionWord& f,
                                 const WhirlOrder& order) {
    order.validate_for(family);
    check_member(family, f);
    std::vector<int> values = f.values();
    const auto& seq = order.sequence();
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        whirl_value_inverse(family, values, *it);
    return FunctionWord(f.n(), f.k(), std::move(values));
}

// ---------------------------------------------------------------------------
// OP <-> OPInj bridge
// ---------------------------------------------------------------------------

FunctionWord op_to_opinj(const FunctionWord& f) {
    std::vector<int> values = f.values();
    for (int i = 0; i < f.n(); ++i) values[i] += i;
    return FunctionWord(f.n(), f.k() + f.n() - 1, std::move(values));
}

FunctionWord opinj_to_op(const FunctionWord& g) {
    if (g.k() < g.n()) throw ShapeMismatch("bridge needs k >= n");
    std::vector<int> values = g.values();
    for (int i = 0; i < g.n(); ++i) {
        values[i] -= i;
        if (values[i] < 1) throw NotMember("word " + g.str() + " is not strictly increasing");
    }
    return FunctionWord(g.n(), g.k() - g.n() + 1, std::move(values));
}

}  // namespace whirl
