#include <doctest.h>

#include <algorithm>

#include "whirl/orbit.hpp"
#include "whirl/whirl.hpp"

using namespace whirl;

namespace {

FunctionWord wd(const FamilySpec& family, const std::string& text) {
    return FunctionWord::parse(text, family.n(), family.k());
}

// Exhaustive check that two one-step maps agree on a family.
void check_whirl_equals(const FamilySpec& family,
                        FunctionWord (*lhs)(const FamilySpec&, const FunctionWord&, int),
                        FunctionWord (*rhs)(const FamilySpec&, const FunctionWord&, int)) {
    for (const auto& word : enumerate_family(family).words)
        for (int i = 1; i <= family.n(); ++i) {
            INFO(family.str(), " ", word.str(), " ", i);
            CHECK(lhs(family, word, i) == rhs(family, word, i));
        }
}

}  // namespace

TEST_CASE("whirl at one index: multiplicity families") {
    CHECK(whirl_at(FamilySpec::inj(2, 6, 4), wd(FamilySpec::inj(2, 6, 4), "422343"), 3).str() ==
          "421343");
    CHECK(whirl_at(FamilySpec::inj(3, 7, 3), wd(FamilySpec::inj(3, 7, 3), "1221332"), 1).str() ==
          "3221332");
    CHECK(whirl_at(FamilySpec::sur(1, 7, 3), wd(FamilySpec::sur(1, 7, 3), "1221332"), 1).str() ==
          "2221332");
    CHECK(whirl_at(FamilySpec::sur(2, 7, 3), wd(FamilySpec::sur(2, 7, 3), "1221332"), 1).str() ==
          "1221332");
}

TEST_CASE("whirl at one index: noncrossing words can jump") {
    FamilySpec fam = FamilySpec::rg_nc(6, 4);
    CHECK(whirl_at(fam, wd(fam, "123442"), 4).str() == "123242");
}

TEST_CASE("whirl rejects bad input") {
    FamilySpec fam = FamilySpec::inj(1, 3, 6);
    CHECK_THROWS_AS(whirl_at(fam, wd(fam, "622"), 1), NotMember);
    CHECK_THROWS_AS(whirl_at(fam, wd(fam, "621"), 0), IndexOutOfRange);
    CHECK_THROWS_AS(whirl_at(fam, wd(fam, "621"), 4), IndexOutOfRange);
}

TEST_CASE("left-to-right whirl chains") {
    CHECK(apply_order(FamilySpec::inj(1, 4, 7), wd(FamilySpec::inj(1, 4, 7), "2753"),
                      WhirlOrder::identity(4))
              .str() == "4165");
    CHECK(apply_order(FamilySpec::park(4), wd(FamilySpec::park(4), "1332"),
                      WhirlOrder::identity(4))
              .str() == "1413");
    CHECK(apply_order(FamilySpec::rg(7, 4), wd(FamilySpec::rg(7, 4), "1213341"),
                      WhirlOrder::identity_tail(7))
              .str() == "1221342");
    CHECK(apply_order(FamilySpec::rg(7), wd(FamilySpec::rg(7), "1213341"),
                      WhirlOrder::identity_tail(7))
              .str() == "1221312");
    // full-domain orders act identically on restricted growth words
    CHECK(apply_order(FamilySpec::rg(7, 4), wd(FamilySpec::rg(7, 4), "1213341"),
                      WhirlOrder::identity(7))
              .str() == "1221342");
}

TEST_CASE("noncrossing chains and the mislabeled one") {
    // The noncrossing exact-k chain.
    FamilySpec nc64 = FamilySpec::rg_nc(6, 4);
    CHECK(apply_order(nc64, wd(nc64, "123442"), WhirlOrder::identity_tail(6)).str() == "123244");

    // The free-k noncrossing chain: steps land on 123242, 123222, 123224.
    FamilySpec nc6 = FamilySpec::rg_nc(6);
    FunctionWord f = wd(nc6, "123442");
    f = whirl_at(nc6, f, 4);
    CHECK(f.str() == "123242");
    f = whirl_at(nc6, f, 5);
    CHECK(f.str() == "123222");
    f = whirl_at(nc6, f, 6);
    CHECK(f.str() == "123224");

    // Dropping the noncrossing condition changes the dynamics: on the plain
    // restricted growth family the same start behaves differently (index 4
    // already diverges, and index 5 of 123242 gives 123212 there).
    FamilySpec rg6 = FamilySpec::rg(6);
    CHECK(whirl_at(rg6, wd(rg6, "123442"), 4).str() == "123142");
    CHECK(whirl_at(rg6, wd(rg6, "123242"), 5).str() == "123212");
    CHECK(apply_order(rg6, wd(rg6, "123442"), WhirlOrder::identity_tail(6)).str() == "123113");
}

TEST_CASE("inverse whirl undoes whirl") {
    FamilySpec inj24 = FamilySpec::inj(2, 6, 4);
    CHECK(whirl_inverse_at(inj24, wd(inj24, "421343"), 3).str() == "422343");
    FamilySpec sur2 = FamilySpec::sur(2, 7, 3);
    CHECK(whirl_inverse_at(sur2, wd(sur2, "1221332"), 1).str() == "1221332");
    FamilySpec inj16 = FamilySpec::inj(1, 3, 6);
    CHECK(whirl_at(inj16, wd(inj16, "621"), 1).str() == "321");
    CHECK(whirl_inverse_at(inj16, wd(inj16, "321"), 1).str() == "621");
}

TEST_CASE("whirl is a bijection on every family") {
    std::vector<FamilySpec> families = {
        FamilySpec::inj(1, 3, 6),  FamilySpec::inj(2, 4, 4), FamilySpec::sur(1, 4, 3),
        FamilySpec::sur(2, 5, 2),  FamilySpec::park(4),      FamilySpec::op(3, 5),
        FamilySpec::opinj(3, 6),   FamilySpec::rg(5, 3),     FamilySpec::rg(5),
        FamilySpec::rg_nc(5, 3),   FamilySpec::rg_nc(5)};
    for (const auto& family : families)
        for (const auto& word : enumerate_family(family).words)
            for (int i = 1; i <= family.n(); ++i) {
                INFO(family.str(), " ", word.str(), " ", i);
                CHECK(whirl_inverse_at(family, whirl_at(family, word, i), i) == word);
                CHECK(whirl_at(family, whirl_inverse_at(family, word, i), i) == word);
            }
}

TEST_CASE("closed forms agree with the definitional loop") {
    std::vector<FamilySpec> families = {FamilySpec::park(4),     FamilySpec::park(5),
                                        FamilySpec::op(4, 6),    FamilySpec::op(3, 4),
                                        FamilySpec::opinj(4, 7), FamilySpec::opinj(3, 6),
                                        FamilySpec::rg(6, 3),    FamilySpec::rg(6, 4),
                                        FamilySpec::rg(6),       FamilySpec::rg(5)};
    for (const auto& family : families) check_whirl_equals(family, whirl_direct_at, whirl_at);
}

TEST_CASE("closed-form one-step examples") {
    CHECK(whirl_direct_at(FamilySpec::park(4), wd(FamilySpec::park(4), "1332"), 2).str() ==
          "1432");
    CHECK(whirl_direct_at(FamilySpec::opinj(4, 9), wd(FamilySpec::opinj(4, 9), "1567"), 1).str() ==
          "2567");
    FamilySpec rg74 = FamilySpec::rg(7, 4);
    CHECK(whirl_direct_at(rg74, wd(rg74, "1213341"), 4).str() == "1211341");
    CHECK(whirl_direct_at(rg74, wd(rg74, "1223341"), 4).str() == "1221341");
    CHECK_THROWS_AS(
        whirl_direct_at(FamilySpec::inj(1, 3, 6), wd(FamilySpec::inj(1, 3, 6), "621"), 1),
        UnsupportedFamily);
    CHECK_THROWS_AS(
        whirl_direct_at(FamilySpec::rg_nc(6, 4), wd(FamilySpec::rg_nc(6, 4), "123442"), 4),
        UnsupportedFamily);
}

TEST_CASE("one-step value shape") {
    // At-least-once families: each step adds one cyclically or stalls.
    for (const auto& family : {FamilySpec::sur(1, 5, 3), FamilySpec::sur(2, 6, 3)})
        for (const auto& word : enumerate_family(family).words)
            for (int i = 1; i <= family.n(); ++i) {
                int before = word(i);
                int after = whirl_at(family, word, i)(i);
                INFO(family.str(), " ", word.str(), " ", i);
                CHECK((after == before || after == (before % family.k()) + 1));
            }
    // Restricted growth families: add one, stall, or fall to 1.
    for (const auto& family : {FamilySpec::rg(6, 3), FamilySpec::rg(6)})
        for (const auto& word : enumerate_family(family).words)
            for (int i = 1; i <= family.n(); ++i) {
                int before = word(i);
                int after = whirl_at(family, word, i)(i);
                INFO(family.str(), " ", word.str(), " ", i);
                CHECK((after == before + 1 || after == before || after == 1));
            }
}

TEST_CASE("whirling at a permuted index matches whirling the rearranged word") {
    std::vector<FamilySpec> families = {FamilySpec::inj(2, 4, 3), FamilySpec::sur(1, 4, 3),
                                        FamilySpec::park(4)};
    std::vector<int> sigma = {3, 1, 4, 2};  // sigma(1)=3, ...
    for (const auto& family : families) {
        for (const auto& word : enumerate_family(family).words) {
            // g = word o sigma
            std::vector<int> gv(4);
            for (int i = 1; i <= 4; ++i) gv[i - 1] = word(sigma[i - 1]);
            FunctionWord g = make_word(4, family.k(), gv);
            for (int i = 1; i <= 4; ++i) {
                FunctionWord lhs = whirl_at(family, g, i);
                FunctionWord rhs = whirl_at(family, word, sigma[i - 1]);
                for (int j = 1; j <= 4; ++j) {
                    INFO(family.str(), " ", word.str(), " ", i, " ", j);
                    CHECK(lhs(j) == rhs(sigma[j - 1]));
                }
            }
        }
    }
}

TEST_CASE("whirling at 1 fixes every restricted growth word") {
    for (const auto& family : {FamilySpec::rg(5, 3), FamilySpec::rg(5), FamilySpec::rg_nc(5),
                               FamilySpec::rg_nc(5, 2)})
        for (const auto& word : enumerate_family(family).words)
            CHECK(whirl_at(family, word, 1) == word);
}

TEST_CASE("order descriptors") {
    CHECK(WhirlOrder::identity(4).str() == "id");
    CHECK(WhirlOrder::identity_tail(5).str() == "id");
    CHECK(WhirlOrder::reversed(3).str() == "3,2,1");
    CHECK(WhirlOrder::parse("3,5,2,4,6,1", 6).sequence() ==
          std::vector<int>{3, 5, 2, 4, 6, 1});
    CHECK(WhirlOrder::parse("id", 4) == WhirlOrder::identity(4));
    CHECK_THROWS_AS(WhirlOrder::parse("1,1,2", 3), IndexOutOfRange);
    CHECK_THROWS_AS(WhirlOrder::parse("1,2", 3), IndexOutOfRange);
    CHECK_THROWS_AS(WhirlOrder(4, {2, 3}), IndexOutOfRange);
    CHECK_NOTHROW(WhirlOrder(4, {2, 3, 4}));  // tail order
    // tail orders are only legal on restricted growth families
    WhirlOrder tail = WhirlOrder::identity_tail(4);
    CHECK_THROWS_AS(tail.validate_for(FamilySpec::park(4)), IndexOutOfRange);
    CHECK_NOTHROW(tail.validate_for(FamilySpec::rg(4)));
    // normalization strips the trivial index for restricted growth families
    CHECK(WhirlOrder::identity(4).normalized_for(FamilySpec::rg(4)) ==
          WhirlOrder::identity_tail(4));
    CHECK(WhirlOrder::identity(4).normalized_for(FamilySpec::park(4)) ==
          WhirlOrder::identity(4));
}

TEST_CASE("inverse order composition") {
    FamilySpec fam = FamilySpec::inj(1, 4, 5);
    WhirlOrder order = WhirlOrder::parse("3,1,4,2", 4);
    for (const auto& word : enumerate_family(fam).words) {
        CHECK(apply_order_inverse(fam, apply_order(fam, word, order), order) == word);
        CHECK(apply_order(fam, apply_order_inverse(fam, word, order), order) == word);
    }
}

TEST_CASE("steppers agree with the definitional path") {
    std::vector<FamilySpec> families = {
        FamilySpec::inj(1, 4, 5),  FamilySpec::inj(2, 5, 3), FamilySpec::sur(1, 5, 3),
        FamilySpec::sur(2, 6, 3),  FamilySpec::park(4),      FamilySpec::op(4, 5),
        FamilySpec::opinj(3, 6),   FamilySpec::rg(6, 3),     FamilySpec::rg(5),
        FamilySpec::rg_nc(6, 3)};
    OrderSampler sampler(7);
    for (const auto& family : families) {
        std::vector<WhirlOrder> orders = {WhirlOrder::identity(family.n()),
                                          WhirlOrder::reversed(family.n()),
                                          sampler.random_order(family.n())};
        if (family.rg_like()) orders.push_back(sampler.random_order(family.n(), true));
        for (const auto& order : orders) {
            auto fast = make_stepper(family, order);
            for (const auto& word : enumerate_family(family).words) {
                std::vector<int> buf = word.values();
                fast->seed(buf);
                fast->step(buf);
                INFO(family.str(), " ", order.str(), " ", word.str());
                CHECK(make_word(family.n(), family.k(), buf) ==
                      apply_order(family, word, order));
            }
        }
    }
}

TEST_CASE("multiset bridge intertwines the two order-preserving whirls") {
    FamilySpec op46 = FamilySpec::op(4, 6);
    FamilySpec target = FamilySpec::opinj(4, 9);
    CHECK(op_to_opinj(wd(op46, "1444")).str() == "1567");
    CHECK(opinj_to_op(wd(target, "1567")).str() == "1444");
    for (const auto& word : enumerate_family(op46).words)
        for (int i = 1; i <= 4; ++i) {
            INFO(word.str(), " ", i);
            CHECK(op_to_opinj(whirl_at(op46, word, i)) ==
                  whirl_at(target, op_to_opinj(word), i));
        }
}

TEST_CASE("seeded order sampling is reproducible") {
    OrderSampler a(42), b(42);
    for (int t = 0; t < 5; ++t) CHECK(a.random_order(7) == b.random_order(7));
    OrderSampler c(42);
    WhirlOrder tail = c.random_order(7, true);
    CHECK_FALSE(tail.full_domain());
    CHECK(std::find(tail.sequence().begin(), tail.sequence().end(), 1) ==
          tail.sequence().end());
}
