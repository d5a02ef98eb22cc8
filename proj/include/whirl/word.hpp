#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace whirl {

// ---------------------------------------------------------------------------
// Errors.  Each contract violation gets its own type so callers (and tests)
// can catch precisely what they expect.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfRange : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct SizeLimit : Error { using Error::Error; };
struct NotMember : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };
struct WrongFamily : Error { using Error::Error; };
struct NoPartition : Error { using Error::Error; };
struct BrokenChain : Error { using Error::Error; };
struct NonUniqueStep : Error { using Error::Error; };
struct BadComposition : Error { using Error::Error; };
struct NoConsistentFactorization : Error { using Error::Error; };
struct BadProduct : Error { using Error::Error; };
struct NotTree : Error { using Error::Error; };
struct Crossing : Error { using Error::Error; };
struct LabelOrder : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// FunctionWord: a function [n] -> [k] in one-line notation.  Entries are
// 1-based everywhere; no 0-based value ever crosses an interface.
// ---------------------------------------------------------------------------

class FunctionWord {
public:
    FunctionWord(int n, int k, std::vector<int> values);

    int n() const { return n_; }
    int k() const { return k_; }

    // f(i) with 1 <= i <= n.
    int operator()(int i) const;

    const std::vector<int>& values() const { return values_; }

    bool operator==(const FunctionWord& o) const {
        return n_ == o.n_ && k_ == o.k_ && values_ == o.values_;
    }
    bool operator!=(const FunctionWord& o) const { return !(*this == o); }

    // Lexicographic on the value sequence; only meaningful within one shape.
    bool operator<(const FunctionWord& o) const { return values_ < o.values_; }

    // One-line notation: digits concatenated for k <= 9, comma-separated
    // otherwise.
    std::string str() const;

    static FunctionWord parse(std::string_view text, int n, int k);

private:
    int n_;
    int k_;
    std::vector<int> values_;
};

FunctionWord make_word(int n, int k, std::vector<int> values);

std::string format_values(std::span<const int> values, int k);

// ---------------------------------------------------------------------------
// FamilySpec: one of the nine parameterized families, with a pure membership
// predicate.
// ---------------------------------------------------------------------------

enum class FamilyKind {
    InjM,    // every value occurs at most m times
    SurM,    // every value in [k] occurs at least m times
    Park,    // parking functions, k = n
    OP,      // weakly increasing
    OPInj,   // strictly increasing
    RGnk,    // restricted growth words with exactly k values
    RGn,     // restricted growth words, any number of values, k = n
    RGncNK,  // noncrossing restricted growth words with exactly k values
    RGncN,   // noncrossing restricted growth words, k = n
};

class FamilySpec {
public:
    static FamilySpec inj(int m, int n, int k);
    static FamilySpec sur(int m, int n, int k);
    static FamilySpec park(int n);
    static FamilySpec op(int n, int k);
    static FamilySpec opinj(int n, int k);
    static FamilySpec rg(int n, int k);
    static FamilySpec rg(int n);
    static FamilySpec rg_nc(int n, int k);
    static FamilySpec rg_nc(int n);

    FamilyKind kind() const { return kind_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int m() const { return m_; }  // only meaningful for InjM/SurM

    bool has_m() const { return kind_ == FamilyKind::InjM || kind_ == FamilyKind::SurM; }

    // Whirling at index 1 is trivial on these, so orders over {2..n} are
    // accepted alongside full orders.
    bool rg_like() const {
        return kind_ == FamilyKind::RGnk || kind_ == FamilyKind::RGn ||
               kind_ == FamilyKind::RGncNK || kind_ == FamilyKind::RGncN;
    }

    bool operator==(const FamilySpec& o) const {
        return kind_ == o.kind_ && n_ == o.n_ && k_ == o.k_ && m_ == o.m_;
    }

    // Descriptor string, e.g. "inj:m=2,n=6,k=4", "park:n=3", "rg:n=5,k=3".
    std::string str() const;
    static FamilySpec parse(std::string_view descriptor);

private:
    FamilySpec(FamilyKind kind, int n, int k, int m);

    FamilyKind kind_;
    int n_;
    int k_;
    int m_;
};

// Membership predicate on raw values (no shape re-validation beyond length).
bool is_member_values(const FamilySpec& family, std::span<const int> values);

// Throws ShapeMismatch if (n,k) disagree with the family.
bool is_member(const FamilySpec& family, const FunctionWord& f);

// ---------------------------------------------------------------------------
// Enumeration.
// ---------------------------------------------------------------------------

struct EnumerationLimits {
    // Ceiling on k^n candidate words scanned by direct filtration.
    std::uint64_t max_candidates = 100'000'000;
    // Ceiling on family members handled by whole-family operations.
    std::uint64_t max_census = 1'000'000;
};

struct FamilyCensus {
    FamilySpec family;
    std::uint64_t cardinality = 0;
    std::vector<FunctionWord> words;  // strictly increasing lexicographically
};

// k^n, or max_candidates+1 on overflow (callers only compare to the limit).
std::uint64_t candidate_count(int n, int k, std::uint64_t cap);

FamilyCensus enumerate_family(const FamilySpec& family,
                              const EnumerationLimits& limits = {});

// Visits the members in lexicographic order without materializing them; the
// span is a reusable buffer.
void for_each_member(const FamilySpec& family,
                     const std::function<void(std::span<const int>)>& fn,
                     const EnumerationLimits& limits = {});

}  // namespace whirl
