#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "whirl/whirl.hpp"
#include "whirl/word.hpp"

namespace whirl {

// ---------------------------------------------------------------------------
// Orbit: the cycle of a word under a whirl order.  words[0] is the
// lexicographically least member; words[t+1] = apply_order(words[t]) and the
// last word steps back to words[0].
// ---------------------------------------------------------------------------

struct Orbit {
    FamilySpec family;
    WhirlOrder order;
    std::vector<FunctionWord> words;

    std::uint64_t length() const { return words.size(); }
    const FunctionWord& representative() const { return words.front(); }
};

Orbit orbit_of(const FamilySpec& family, const FunctionWord& f, const WhirlOrder& order);

// Disjoint orbits covering the census, sorted by representative.
std::vector<Orbit> orbit_partition(const FamilySpec& family, const WhirlOrder& order,
                                   const EnumerationLimits& limits = {});

// ---------------------------------------------------------------------------
// OrbitBoard: the cylindrical row-per-step grid.  Rows can be anchored at any
// member (the paper's figures start at the queried word); row 0 defaults to
// the canonical representative.  Cells are addressed by (row, col) with row
// in [0, rows) and col in [1, cols], or by a row-major linear index that
// wraps modulo rows*cols (after the last cell of the bottom row comes the
// first cell of the top row).
// ---------------------------------------------------------------------------

class OrbitBoard {
public:
    explicit OrbitBoard(Orbit orbit);
    OrbitBoard(Orbit orbit, const FunctionWord& anchor);

    const Orbit& orbit() const { return orbit_; }
    const FamilySpec& family() const { return orbit_.family; }
    const WhirlOrder& order() const { return orbit_.order; }

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return orbit_.family.n(); }
    std::int64_t cells() const { return static_cast<std::int64_t>(rows()) * cols(); }

    const FunctionWord& row_word(int row) const { return rows_[row]; }
    int value(int row, int col) const { return rows_[row](col); }

    std::int64_t cell_index(int row, int col) const {
        return static_cast<std::int64_t>(row) * cols() + (col - 1);
    }
    std::pair<int, int> cell_at(std::int64_t index) const;
    int value_at(std::int64_t index) const;

    // (P,h): the cell h steps after P in reading order (before, for h < 0).
    std::int64_t step(std::int64_t index, std::int64_t h) const;
    // (P,[a,b]).
    std::vector<std::int64_t> window(std::int64_t index, std::int64_t a, std::int64_t b) const;

private:
    Orbit orbit_;
    std::vector<FunctionWord> rows_;
};

// ---------------------------------------------------------------------------
// Streaming orbit traversal.  Orbits are visited in order of their (lex-least)
// representative; within an orbit, words are visited in orbit sequence
// starting at the representative.  This is the workhorse behind partitions,
// reports and sweeps, and avoids materializing large censuses.
// ---------------------------------------------------------------------------

struct OrbitVisitor {
    // Called once per word; the span aliases a reusable buffer.
    std::function<void(std::span<const int>)> on_word;
    // Called after each orbit with its representative and length.
    std::function<void(std::span<const int>, std::uint64_t)> on_orbit_end;
};

void for_each_orbit(const FamilySpec& family, const WhirlOrder& order,
                    const OrbitVisitor& visitor, const EnumerationLimits& limits = {});

// The member words of the family as lexicographically sorted mixed-radix
// ranks.  Lets callers that sweep many orders over one family pay for the
// candidate scan once.
std::vector<std::uint64_t> member_ranks(const FamilySpec& family,
                                        const EnumerationLimits& limits = {});

// Same traversal as for_each_orbit over a precomputed rank list.
void for_each_orbit_ranked(const FamilySpec& family, const WhirlOrder& order,
                           const std::vector<std::uint64_t>& ranks,
                           const OrbitVisitor& visitor);

// Least common multiple of all orbit lengths (the order of the composite map).
std::uint64_t map_order(const FamilySpec& family, const WhirlOrder& order,
                        const EnumerationLimits& limits = {});

// ---------------------------------------------------------------------------
// Steppers: in-place appliers of a whole whirl order, specialized per family
// (count-based for InjM/SurM, closed-form for Park/OP/OPInj/RG, generic loop
// otherwise).  Each agrees with apply_order on every member; tests compare
// them exhaustively.
// ---------------------------------------------------------------------------

class OrderStepper {
public:
    virtual ~OrderStepper() = default;
    // Reset internal state for a fresh orbit starting at w.
    virtual void seed(const std::vector<int>& w) { (void)w; }
    // w := image of w under the whole order.
    virtual void step(std::vector<int>& w) = 0;
};

std::unique_ptr<OrderStepper> make_stepper(const FamilySpec& family, const WhirlOrder& order);
// The definitional one (successor loop + membership test), for equivalence tests.
std::unique_ptr<OrderStepper> make_generic_stepper(const FamilySpec& family,
                                                   const WhirlOrder& order);

}  // namespace whirl
