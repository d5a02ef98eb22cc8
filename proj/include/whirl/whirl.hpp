#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "whirl/word.hpp"

namespace whirl {

// ---------------------------------------------------------------------------
// WhirlOrder: the sequence of indices a composite whirl applies, first
// element first.  The index set is [n], or {2..n} for the restricted-growth
// families (where whirling at 1 is the identity).
// ---------------------------------------------------------------------------

class WhirlOrder {
public:
    WhirlOrder(int n, std::vector<int> sequence);

    static WhirlOrder identity(int n);
    static WhirlOrder reversed(int n);
    // Identity over {2..n}.
    static WhirlOrder identity_tail(int n);

    int n() const { return n_; }
    const std::vector<int>& sequence() const { return seq_; }

    // True when the index set is all of [n].
    bool full_domain() const { return seq_.size() == static_cast<size_t>(n_); }

    // Throws IndexOutOfRange unless the index set is legal for the family.
    void validate_for(const FamilySpec& family) const;

    // For RG-like families drops the trivial index 1; otherwise returns *this.
    WhirlOrder normalized_for(const FamilySpec& family) const;

    bool operator==(const WhirlOrder& o) const { return n_ == o.n_ && seq_ == o.seq_; }

    // "id" when the sequence is sorted ascending, else "3,5,2,4,6,1".
    std::string str() const;
    static WhirlOrder parse(std::string_view text, int n);

private:
    int n_;
    std::vector<int> seq_;
};

// Deterministic order sampling (used for seeded sweeps; std::shuffle is
// implementation-defined, this is not).
class OrderSampler {
public:
    explicit OrderSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next();
    std::uint64_t next_below(std::uint64_t bound);
    WhirlOrder random_order(int n, bool tail_only = false);

private:
    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Whirling at one index: repeatedly replace f(i) by its cyclic successor in
// [1,k] until the word lands back in the family.  Always terminates within k
// tries (the k-th candidate is f(i) itself).
// ---------------------------------------------------------------------------

FunctionWord whirl_at(const FamilySpec& family, const FunctionWord& f, int i);

// The inverse: cyclic predecessors instead of successors.
FunctionWord whirl_inverse_at(const FamilySpec& family, const FunctionWord& f, int i);

// Closed-form whirl for Park / OP / OPInj / RGnk / RGn; must agree with
// whirl_at on every member (tested exhaustively).  UnsupportedFamily for the
// rest.
FunctionWord whirl_direct_at(const FamilySpec& family, const FunctionWord& f, int i);

// Low-level variants on raw value buffers (no validation, no allocation).
int whirl_value_generic(const FamilySpec& family, std::vector<int>& values, int i);
int whirl_value_inverse(const FamilySpec& family, std::vector<int>& values, int i);
int whirl_direct_value(const FamilySpec& family, std::span<const int> values, int i);

// Folds whirl_at over the order, first element first.
FunctionWord apply_order(const FamilySpec& family, const FunctionWord& f,
                         const WhirlOrder& order);

// Folds whirl_inverse_at over the reversed order.
FunctionWord apply_order_inverse(const FamilySpec& family, const FunctionWord& f,
                                 const WhirlOrder& order);

// ---------------------------------------------------------------------------
// The OP(n,k) <-> OPInj(n,k+n-1) bridge g(i) = f(i)+i-1, which commutes with
// whirling index by index.
// ---------------------------------------------------------------------------

FunctionWord op_to_opinj(const FunctionWord& f);
FunctionWord opinj_to_op(const FunctionWord& g);

}  // namespace whirl
