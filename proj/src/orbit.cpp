#include "whirl/orbit.hpp"

#include <algorithm>
#include <numeric>

namespace whirl {

// ---------------------------------------------------------------------------
// Steppers
// ---------------------------------------------------------------------------

namespace {

class GenericStepper final : public OrderStepper {
public:
    GenericStepper(FamilySpec family, WhirlOrder order)
        : family_(std::move(family)), order_(std::move(order)) {}
    void step(std::vector<int>& w) override {
        for (int i : order_.sequence()) whirl_value_generic(family_, w, i);
    }

private:
    FamilySpec family_;
    WhirlOrder order_;
};

class DirectStepper final : public OrderStepper {
public:
    DirectStepper(FamilySpec family, WhirlOrder order)
        : family_(std::move(family)), order_(std::move(order)) {}
    void step(std::vector<int>& w) override {
        for (int i : order_.sequence()) w[i - 1] = whirl_direct_value(family_, w, i);
    }

private:
    FamilySpec family_;
    WhirlOrder order_;
};

// Count-based stepper for InjM/SurM.  Value counts ride along the orbit, so
// one whirl is O(tries) instead of O(tries * n).
class CountStepper final : public OrderStepper {
public:
    CountStepper(FamilySpec family, WhirlOrder order)
        : family_(std::move(family)), order_(std::move(order)),
          at_most_(family_.kind() == FamilyKind::InjM) {}

    void seed(const std::vector<int>& w) override {
        counts_.assign(family_.k() + 1, 0);
        for (int v : w) ++counts_[v];
    }

    void step(std::vector<int>& w) override {
        const int k = family_.k();
        const int m = family_.m();
        for (int i : order_.sequence()) {
            int v = w[i - 1];
            --counts_[v];
            int chosen = v;
            if (at_most_) {
                for (int t = 1; t <= k; ++t) {
                    int cand = v + t;
                    if (cand > k) cand -= k;
                    if (counts_[cand] < m) { chosen = cand; break; }
                }
            } else {
                // Moving off v is legal iff v keeps its quota; the target is
                // then always the immediate successor.
                chosen = counts_[v] >= m ? (v == k ? 1 : v + 1) : v;
            }
            ++counts_[chosen];
            w[i - 1] = chosen;
        }
    }

private:
    FamilySpec family_;
    WhirlOrder order_;
    bool at_most_;
    std::vector<int> counts_;
};

}  // namespace

std::unique_ptr<OrderStepper> make_generic_stepper(const FamilySpec& family,
                                                   const WhirlOrder& order) {
    order.validate_for(family);
    return std::make_unique<GenericStepper>(family, order.normalized_for(family));
}

std::unique_ptr<OrderStepper> make_stepper(const FamilySpec& family, const WhirlOrder& order) {
    order.validate_for(family);
    WhirlOrder normal = order.normalized_for(family);
    switch (family.kind()) {
        case FamilyKind::InjM:
        case FamilyKind::SurM:
            return std::make_unique<CountStepper>(family, std::move(normal));
        case FamilyKind::Park:
        case FamilyKind::OP:
        case FamilyKind::OPInj:
        case FamilyKind::RGnk:
        case FamilyKind::RGn:
            return std::make_unique<DirectStepper>(family, std::move(normal));
        case FamilyKind::RGncNK:
        case FamilyKind::RGncN:
            return std::make_unique<GenericStepper>(family, std::move(normal));
    }
    throw Error("unhandled family kind");
}

// ---------------------------------------------------------------------------
// Streaming orbit traversal
// ---------------------------------------------------------------------------

namespace {

std::uint64_t rank_of(std::span<const int> w, int k) {
    std::uint64_t r = 0;
    for (int v : w) r = r * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(v - 1);
    return r;
}

void unrank(std::uint64_t r, int n, int k, std::vector<int>& out) {
    out.resize(n);
    for (int i = n - 1; i >= 0; --i) {
        out[i] = static_cast<int>(r % static_cast<std::uint64_t>(k)) + 1;
        r /= static_cast<std::uint64_t>(k);
    }
}

}  // namespace

std::vector<std::uint64_t> member_ranks(const FamilySpec& family,
                                        const EnumerationLimits& limits) {
    std::vector<std::uint64_t> ranks;
    for_each_member(family, [&](std::span<const int> w) {
        ranks.push_back(rank_of(w, family.k()));
        if (ranks.size() > limits.max_census)
            throw SizeLimit("census exceeds the ceiling " + std::to_string(limits.max_census));
    }, limits);
    return ranks;
}

void for_each_orbit_ranked(const FamilySpec& family, const WhirlOrder& order,
                           const std::vector<std::uint64_t>& ranks,
                           const OrbitVisitor& visitor) {
    order.validate_for(family);
    const int n = family.n();
    const int k = family.k();
    std::uint64_t space = ranks.empty() ? 1 : ranks.back() + 1;
    std::vector<bool> seen(space, false);
    auto stepper = make_stepper(family, order);

    std::vector<int> seedw;
    std::vector<int> walker;
    for (std::uint64_t r : ranks) {
        if (seen[r]) continue;
        // Ranks arrive in lexicographic order, so the first unseen member of
        // an orbit is its lexicographically least word.
        unrank(r, n, k, seedw);
        walker = seedw;
        stepper->seed(walker);
        std::uint64_t length = 0;
        do {
            seen[rank_of(walker, k)] = true;
            ++length;
            if (visitor.on_word) visitor.on_word(walker);
            stepper->step(walker);
        } while (walker != seedw);
        if (visitor.on_orbit_end) visitor.on_orbit_end(seedw, length);
    }
}

void for_each_orbit(const FamilySpec& family, const WhirlOrder& order,
                    const OrbitVisitor& visitor, const EnumerationLimits& limits) {
    for_each_orbit_ranked(family, order, member_ranks(family, limits), visitor);
}

// ---------------------------------------------------------------------------
// Orbits
// ---------------------------------------------------------------------------

Orbit orbit_of(const FamilySpec& family, const FunctionWord& f, const WhirlOrder& order) {
    order.validate_for(family);
    if (!is_member(family, f))
        throw NotMember("word " + f.str() + " is not in " + family.str());

    auto stepper = make_stepper(family, order);
    std::vector<std::vector<int>> cycle;
    std::vector<int> w = f.values();
    stepper->seed(w);
    size_t least = 0;
    do {
        cycle.push_back(w);
        if (cycle.back() < cycle[least]) least = cycle.size() - 1;
        stepper->step(w);
    } while (w != f.values());

    Orbit orbit{family, order.normalized_for(family), {}};
    orbit.words.reserve(cycle.size());
    for (size_t t = 0; t < cycle.size(); ++t)
        orbit.words.emplace_back(family.n(), family.k(),
                                 std::move(cycle[(least + t) % cycle.size()]));
    return orbit;
}

std::vector<Orbit> orbit_partition(const FamilySpec& family, const WhirlOrder& order,
                                   const EnumerationLimits& limits) {
    std::vector<Orbit> orbits;
    WhirlOrder normal = order.normalized_for(family);
    Orbit current{family, normal, {}};
    OrbitVisitor visitor;
    visitor.on_word = [&](std::span<const int> w) {
        current.words.emplace_back(family.n(), family.k(), std::vector<int>(w.begin(), w.end()));
    };
    visitor.on_orbit_end = [&](std::span<const int>, std::uint64_t) {
        orbits.push_back(std::move(current));
        current = Orbit{family, normal, {}};
    };
    for_each_orbit(family, order, visitor, limits);
    // for_each_orbit discovers orbits at their lexicographically least word,
    // in lexicographic order, so the list is already sorted by representative.
    return orbits;
}

std::uint64_t map_order(const FamilySpec& family, const WhirlOrder& order,
                        const EnumerationLimits& limits) {
    std::uint64_t result = 1;
    OrbitVisitor visitor;
    visitor.on_orbit_end = [&](std::span<const int>, std::uint64_t length) {
        std::uint64_t g = std::gcd(result, length);
        std::uint64_t factor = length / g;
        if (result > UINT64_MAX / factor) throw Error("map order overflows 64 bits");
        result *= factor;
    };
    for_each_orbit(family, order, visitor, limits);
    return result;
}

// ---------------------------------------------------------------------------
// OrbitBoard
// ---------------------------------------------------------------------------

OrbitBoard::OrbitBoard(Orbit orbit) : orbit_(std::move(orbit)), rows_(orbit_.words) {}

OrbitBoard::OrbitBoard(Orbit orbit, const FunctionWord& anchor) : orbit_(std::move(orbit)) {
    auto it = std::find(orbit_.words.begin(), orbit_.words.end(), anchor);
    if (it == orbit_.words.end())
        throw NotMember("anchor " + anchor.str() + " is not in the orbit of " +
                        orbit_.representative().str());
    rows_.reserve(orbit_.words.size());
    size_t offset = static_cast<size_t>(it - orbit_.words.begin());
    for (size_t t = 0; t < orbit_.words.size(); ++t)
        rows_.push_back(orbit_.words[(offset + t) % orbit_.words.size()]);
}

std::pair<int, int> OrbitBoard::cell_at(std::int64_t index) const {
    std::int64_t m = cells();
    index %= m;
    if (index < 0) index += m;
    return {static_cast<int>(index / cols()), static_cast<int>(index % cols()) + 1};
}

int OrbitBoard::value_at(std::int64_t index) const {
    auto [row, col] = cell_at(index);
    return value(row, col);
}

std::int64_t OrbitBoard::step(std::int64_t index, std::int64_t h) const {
    std::int64_t m = cells();
    std::int64_t r = (index + h) % m;
    return r < 0 ? r + m : r;
}

std::vector<std::int64_t> OrbitBoard::window(std::int64_t index, std::int64_t a,
                                             std::int64_t b) const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<size_t>(b >= a ? b - a + 1 : 0));
    for (std::int64_t h = a; h <= b; ++h) out.push_back(step(index, h));
    return out;
}

}  // namespace whirl
