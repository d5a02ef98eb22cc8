#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "whirl/word.hpp"

using namespace whirl;

namespace {

FunctionWord w(int n, int k, std::vector<int> v) { return make_word(n, k, std::move(v)); }

std::set<std::string> census_set(const FamilySpec& family) {
    std::set<std::string> out;
    for (const auto& word : enumerate_family(family).words) out.insert(word.str());
    return out;
}

}  // namespace

TEST_CASE("make_word validates shape and range") {
    CHECK(w(4, 7, {2, 7, 5, 3}).str() == "2753");
    CHECK(w(1, 1, {1}).str() == "1");
    CHECK_THROWS_AS(w(3, 2, {1, 3, 1}), OutOfRange);
    CHECK_THROWS_AS(w(3, 2, {1, 2}), LengthMismatch);
    CHECK_THROWS_AS(w(2, 3, {0, 1}), OutOfRange);
}

TEST_CASE("one-line notation uses commas past single digits") {
    FunctionWord f = w(6, 11, {4, 6, 11, 10, 5, 6});
    CHECK(f.str() == "4,6,11,10,5,6");
    CHECK(FunctionWord::parse("4,6,11,10,5,6", 6, 11) == f);
    CHECK(FunctionWord::parse("2753", 4, 7) == w(4, 7, {2, 7, 5, 3}));
    CHECK_THROWS_AS(FunctionWord::parse("27x3", 4, 7), ParseError);
}

TEST_CASE("membership: parking") {
    FamilySpec park6 = FamilySpec::park(6);
    CHECK(is_member(park6, w(6, 6, {3, 5, 5, 1, 2, 1})));
    CHECK_FALSE(is_member(park6, w(6, 6, {1, 4, 5, 6, 4, 1})));
    CHECK_THROWS_AS(is_member(park6, w(5, 5, {1, 1, 1, 1, 1})), ShapeMismatch);
}

TEST_CASE("membership: restricted growth and noncrossing") {
    FunctionWord f = w(9, 4, {1, 2, 2, 1, 3, 3, 1, 4, 3});
    CHECK(is_member(FamilySpec::rg(9, 4), f));
    CHECK_FALSE(is_member(FamilySpec::rg_nc(9, 4), f));  // 1,3,1,3 interleaves
    // one-block-per-point and single-block words are always noncrossing
    CHECK(is_member(FamilySpec::rg_nc(5, 5), w(5, 5, {1, 2, 3, 4, 5})));
    CHECK(is_member(FamilySpec::rg_nc(5, 1), w(5, 1, {1, 1, 1, 1, 1})));
    // nesting is fine, interleaving is not
    CHECK(is_member(FamilySpec::rg_nc(4, 2), w(4, 2, {1, 2, 2, 1})));
    CHECK_FALSE(is_member(FamilySpec::rg_nc(4, 2), w(4, 2, {1, 2, 1, 2})));
}

TEST_CASE("membership: multiplicity families") {
    CHECK(is_member(FamilySpec::sur(2, 7, 3), w(7, 3, {1, 2, 2, 1, 3, 3, 2})));
    CHECK_FALSE(is_member(FamilySpec::sur(3, 7, 3), w(7, 3, {1, 2, 2, 1, 3, 3, 2})));
    CHECK(is_member(FamilySpec::inj(2, 6, 4), w(6, 4, {4, 2, 2, 3, 4, 3})));
    CHECK_FALSE(is_member(FamilySpec::inj(1, 6, 4), w(6, 4, {4, 2, 2, 3, 4, 3})));
}

TEST_CASE("membership is monotone in m") {
    const int n = 5, k = 3;
    FamilySpec all = FamilySpec::inj(n, n, k);
    for (const auto& word : enumerate_family(all).words) {
        for (int m = 1; m + 1 <= n; ++m) {
            if (is_member(FamilySpec::inj(m, n, k), word))
                CHECK(is_member(FamilySpec::inj(m + 1, n, k), word));
            if (is_member(FamilySpec::sur(m + 1, n, k), word))
                CHECK(is_member(FamilySpec::sur(m, n, k), word));
        }
    }
}

TEST_CASE("binary surjectivity and injectivity bands coincide") {
    for (int n = 2; n <= 8; ++n)
        for (int m = 1; 2 * m <= n; ++m)
            CHECK(census_set(FamilySpec::sur(m, n, 2)) ==
                  census_set(FamilySpec::inj(n - m, n, 2)));
}

TEST_CASE("parking membership is rearrangement invariant") {
    FamilySpec park5 = FamilySpec::park(5);
    for (const auto& word : enumerate_family(FamilySpec::inj(5, 5, 5)).words) {
        std::vector<int> sorted = word.values();
        std::sort(sorted.begin(), sorted.end());
        CHECK(is_member(park5, word) ==
              is_member(park5, make_word(5, 5, std::move(sorted))));
    }
}

TEST_CASE("every restricted growth word starts at 1") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& word : enumerate_family(FamilySpec::rg(n)).words)
            CHECK(word(1) == 1);
}

TEST_CASE("census sizes match the classical counts") {
    CHECK(enumerate_family(FamilySpec::park(3)).cardinality == 16);
    for (int n = 2; n <= 6; ++n)
        CHECK(enumerate_family(FamilySpec::park(n)).cardinality ==
              oracles::ipow(n + 1, n - 1));
    for (int n = 1; n <= 8; ++n) {
        CHECK(enumerate_family(FamilySpec::rg(n)).cardinality == oracles::bell(n));
        CHECK(enumerate_family(FamilySpec::rg_nc(n)).cardinality == oracles::catalan(n));
        for (int k = 1; k <= n; ++k)
            CHECK(enumerate_family(FamilySpec::rg(n, k)).cardinality ==
                  oracles::stirling2(n, k));
    }
    CHECK(enumerate_family(FamilySpec::rg(5, 3)).cardinality == 25);
    CHECK(enumerate_family(FamilySpec::sur(2, 3, 2)).cardinality == 0);
}

TEST_CASE("noncrossing membership counts by pinned pair") {
    // Among noncrossing words of length 4, the counts of words whose block of
    // 1 contains position i are 5, 4, 5 for i = 2, 3, 4.
    int with2 = 0, with3 = 0, with4 = 0;
    for (const auto& word : enumerate_family(FamilySpec::rg_nc(4)).words) {
        with2 += word(2) == 1;
        with3 += word(3) == 1;
        with4 += word(4) == 1;
    }
    CHECK(with2 == 5);
    CHECK(with3 == 4);
    CHECK(with4 == 5);
}

TEST_CASE("census is strictly increasing lexicographically") {
    auto census = enumerate_family(FamilySpec::sur(1, 4, 3));
    CHECK(census.cardinality == census.words.size());
    for (size_t i = 1; i < census.words.size(); ++i)
        CHECK(census.words[i - 1] < census.words[i]);
}

TEST_CASE("enumeration respects the candidate ceiling") {
    EnumerationLimits limits;
    limits.max_candidates = 100;
    CHECK_THROWS_AS(enumerate_family(FamilySpec::park(4), limits), SizeLimit);
    limits.max_candidates = 1000;
    CHECK_NOTHROW(enumerate_family(FamilySpec::park(3), limits));
    limits.max_census = 5;
    CHECK_THROWS_AS(enumerate_family(FamilySpec::park(3), limits), SizeLimit);
}

TEST_CASE("family descriptors round-trip") {
    for (const char* text : {"inj:m=2,n=6,k=4", "sur:m=1,n=8,k=4", "park:n=3", "op:n=4,k=6",
                             "opinj:n=6,k=9", "rg:n=5,k=3", "rg:n=5", "rgnc:n=6,k=4",
                             "rgnc:n=6"}) {
        CAPTURE(text);
        CHECK(FamilySpec::parse(text).str() == text);
    }
    CHECK_THROWS_AS(FamilySpec::parse("inj:n=6,k=4"), ParseError);     // missing m
    CHECK_THROWS_AS(FamilySpec::parse("park:n=3,x=1"), ParseError);    // unknown field
    CHECK_THROWS_AS(FamilySpec::parse("zap:n=3"), ParseError);         // unknown family
    CHECK_THROWS_AS(FamilySpec::parse("opinj:n=6,k=4"), OutOfRange);   // n > k
    CHECK_THROWS_AS(FamilySpec::parse("rg:n=3,k=5"), OutOfRange);      // k > n
}

TEST_CASE("forced-codomain families pin k to n") {
    CHECK(FamilySpec::park(4).k() == 4);
    CHECK(FamilySpec::rg(6).k() == 6);
    CHECK(FamilySpec::rg_nc(6).k() == 6);
}
