#include <doctest.h>

#include <algorithm>
#include <set>

#include "whirl/certificates.hpp"
#include "whirl/statistics.hpp"

using namespace whirl;

namespace {

FunctionWord wd(const FamilySpec& family, const std::string& text) {
    return FunctionWord::parse(text, family.n(), family.k());
}

std::shared_ptr<const OrbitBoard> board_of(const FamilySpec& family, const std::string& seed,
                                           const WhirlOrder& order) {
    FunctionWord anchor = wd(family, seed);
    return std::make_shared<const OrbitBoard>(orbit_of(family, anchor, order), anchor);
}

std::vector<std::string> row_strings(const OrbitBoard& board) {
    std::vector<std::string> out;
    for (int r = 0; r < board.rows(); ++r) out.push_back(board.row_word(r).str());
    return out;
}

}  // namespace

TEST_CASE("chunks on the length-10 distinct-values board") {
    auto board = board_of(FamilySpec::inj(1, 3, 6), "621", WhirlOrder::identity(3));
    for (ChunkMethod method : {ChunkMethod::Matching, ChunkMethod::Greedy}) {
        ChunkPartition cert = build_chunk_partition(board, method);
        CHECK(cert.chunks.size() == 5);  // 30 cells / 6 values
        std::string why;
        CHECK_MESSAGE(verify_chunk_partition(cert, &why), why);
    }
}

TEST_CASE("chunks on the twice-each board of 1441") {
    FamilySpec fam = FamilySpec::inj(2, 4, 4);
    auto board = board_of(fam, "1441", WhirlOrder::identity(4));
    CHECK(board->rows() == 17);
    for (ChunkMethod method : {ChunkMethod::Matching, ChunkMethod::Greedy}) {
        ChunkPartition cert = build_chunk_partition(board, method);
        CHECK(cert.chunks.size() == 17);
        std::string why;
        CHECK_MESSAGE(verify_chunk_partition(cert, &why), why);
    }
}

TEST_CASE("a fixed identity word makes a one-chunk board") {
    auto board = board_of(FamilySpec::inj(1, 4, 4), "1234", WhirlOrder::identity(4));
    CHECK(board->rows() == 1);
    ChunkPartition cert = build_chunk_partition(board);
    CHECK(cert.chunks.size() == 1);
    CHECK(verify_chunk_partition(cert));
}

TEST_CASE("chunk verification catches a broken gap") {
    auto board = board_of(FamilySpec::inj(1, 3, 6), "621", WhirlOrder::identity(3));
    ChunkPartition cert = build_chunk_partition(board);
    // swap the 2-cells of two different chunks: values still fit, gaps break
    std::vector<int> two_chunks;
    for (size_t id = 0; id < cert.chunks.size(); ++id) two_chunks.push_back(static_cast<int>(id));
    bool broke_one = false;
    for (size_t a = 0; a < cert.chunks.size() && !broke_one; ++a)
        for (size_t b = a + 1; b < cert.chunks.size() && !broke_one; ++b) {
            ChunkPartition tampered = cert;
            std::swap(tampered.chunks[a][1], tampered.chunks[b][1]);
            std::swap(tampered.chunk_of[tampered.chunks[a][1]],
                      tampered.chunk_of[tampered.chunks[b][1]]);
            std::string why;
            if (!verify_chunk_partition(tampered, &why)) broke_one = true;
        }
    CHECK(broke_one);

    // and totality failures are caught
    ChunkPartition missing = cert;
    missing.chunks.pop_back();
    CHECK_FALSE(verify_chunk_partition(missing));
}

TEST_CASE("chunks exist on every small at-most-m board") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= 4; ++k)
            for (int m = (n + k - 1) / k; m <= n; ++m) {
                FamilySpec fam = FamilySpec::inj(m, n, k);
                for (const auto& orbit : orbit_partition(fam, WhirlOrder::identity(n))) {
                    auto board = std::make_shared<const OrbitBoard>(orbit);
                    for (ChunkMethod method : {ChunkMethod::Matching, ChunkMethod::Greedy}) {
                        ChunkPartition cert = build_chunk_partition(board, method);
                        std::string why;
                        INFO(fam.str(), " rep ", orbit.representative().str(), " ", why);
                        CHECK(verify_chunk_partition(cert, &why));
                    }
                }
            }
    CHECK_THROWS_AS(
        build_chunk_partition(board_of(FamilySpec::sur(1, 3, 2), "121", WhirlOrder::identity(3))),
        WrongFamily);
}

TEST_CASE("chunk counts pin the value balance") {
    // each value fills exactly (#chunks) cells, matching the orbit averages
    FamilySpec fam = FamilySpec::inj(2, 5, 3);
    for (const auto& orbit : orbit_partition(fam, WhirlOrder::identity(5))) {
        auto board = std::make_shared<const OrbitBoard>(orbit);
        ChunkPartition cert = build_chunk_partition(board);
        for (int j = 1; j <= 3; ++j) {
            std::int64_t cells = 0;
            for (std::int64_t c = 0; c < board->cells(); ++c)
                cells += board->value_at(c) == j;
            CHECK(cells == static_cast<std::int64_t>(cert.chunks.size()));
            CHECK(orbit_average(orbit, StatisticSpec::eta(j)) ==
                  Rational(static_cast<long long>(cert.chunks.size()),
                           static_cast<long long>(orbit.length())));
        }
    }
}

TEST_CASE("window multiplicity facts") {
    // at-most-m boards: n consecutive cells carry each value at most m times
    FamilySpec inj = FamilySpec::inj(2, 4, 3);
    for (const auto& orbit : orbit_partition(inj, WhirlOrder::identity(4))) {
        OrbitBoard board(orbit);
        for (std::int64_t c = 0; c < board.cells(); ++c) {
            std::vector<int> counts(4, 0);
            for (std::int64_t cell : board.window(c, 0, 3)) ++counts[board.value_at(cell)];
            for (int v = 1; v <= 3; ++v) CHECK(counts[v] <= 2);
        }
    }
    // at-least-once boards: n consecutive cells carry every value
    FamilySpec sur = FamilySpec::sur(1, 5, 3);
    for (const auto& orbit : orbit_partition(sur, WhirlOrder::identity(5))) {
        OrbitBoard board(orbit);
        for (std::int64_t c = 0; c < board.cells(); ++c) {
            std::vector<int> counts(4, 0);
            for (std::int64_t cell : board.window(c, 0, 4)) ++counts[board.value_at(cell)];
            for (int v = 1; v <= 3; ++v) CHECK(counts[v] >= 1);
        }
    }
}

TEST_CASE("red-light cycles on the eight-column board") {
    FamilySpec fam = FamilySpec::sur(1, 8, 4);
    auto board = board_of(fam, "31114424", WhirlOrder::identity(8));
    RedLightCycles cert = build_red_light_cycles(board);
    std::string why;
    CHECK_MESSAGE(verify_red_light_cycles(cert, &why), why);
    REQUIRE(cert.cycles.size() == 2);

    // the two cycles, as (row, col) sets, pinned by hand from the board
    auto cell_set = [&](const std::vector<std::int64_t>& cells) {
        std::set<std::pair<int, int>> out;
        for (auto c : cells) out.insert(board->cell_at(c));
        return out;
    };
    std::set<std::pair<int, int>> first = {{0, 4}, {1, 3}, {2, 2}, {2, 7},
                                           {3, 1}, {3, 8}, {4, 6}, {5, 5}};
    std::set<std::pair<int, int>> second = {{0, 1}, {0, 8}, {1, 6}, {2, 5},
                                            {3, 4}, {4, 3}, {5, 2}, {5, 7}};
    std::set<std::set<std::pair<int, int>>> got = {cell_set(cert.cycles[0]),
                                                   cell_set(cert.cycles[1])};
    CHECK(got == std::set<std::set<std::pair<int, int>>>{first, second});
}

TEST_CASE("a board with no red lights verifies with no cycles") {
    FamilySpec fam = FamilySpec::sur(1, 3, 2);
    auto board = board_of(fam, "121", WhirlOrder::identity(3));
    CHECK(board->rows() == 2);
    RedLightCycles cert = build_red_light_cycles(board);
    CHECK(cert.cycles.empty());
    CHECK(std::count(cert.is_red.begin(), cert.is_red.end(), 1) == 0);
    CHECK(verify_red_light_cycles(cert));
}

TEST_CASE("fixed permutation words are all red lights") {
    FamilySpec fam = FamilySpec::sur(1, 4, 4);
    for (const auto& orbit : orbit_partition(fam, WhirlOrder::identity(4))) {
        CHECK(orbit.length() == 1);
        auto board = std::make_shared<const OrbitBoard>(orbit);
        RedLightCycles cert = build_red_light_cycles(board);
        CHECK(std::count(cert.is_red.begin(), cert.is_red.end(), 1) == board->cells());
        std::int64_t covered = 0;
        for (const auto& cycle : cert.cycles) covered += cycle.size();
        CHECK(covered == board->cells());
        CHECK(verify_red_light_cycles(cert));
    }
}

TEST_CASE("red-light cycles across every small at-least-once board") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            FamilySpec fam = FamilySpec::sur(1, n, k);
            for (const auto& orbit : orbit_partition(fam, WhirlOrder::identity(n))) {
                auto board = std::make_shared<const OrbitBoard>(orbit);
                RedLightCycles cert = build_red_light_cycles(board);
                std::string why;
                INFO(fam.str(), " rep ", orbit.representative().str(), " ", why);
                CHECK(verify_red_light_cycles(cert, &why));
            }
        }
    CHECK_THROWS_AS(
        build_red_light_cycles(board_of(FamilySpec::inj(1, 3, 6), "621", WhirlOrder::identity(3))),
        WrongFamily);
}

TEST_CASE("red-light verification catches tampering") {
    FamilySpec fam = FamilySpec::sur(1, 8, 4);
    auto board = board_of(fam, "31114424", WhirlOrder::identity(8));
    RedLightCycles cert = build_red_light_cycles(board);
    RedLightCycles tampered = cert;
    std::rotate(tampered.cycles[0].begin(), tampered.cycles[0].begin() + 1,
                tampered.cycles[0].end());
    // rotating a cycle keeps it valid; swapping members across cycles breaks it
    CHECK(verify_red_light_cycles(tampered));
    std::swap(tampered.cycles[0][0], tampered.cycles[1][0]);
    CHECK_FALSE(verify_red_light_cycles(tampered));
}

TEST_CASE("snakes on the order-164253 board") {
    FamilySpec fam = FamilySpec::opinj(6, 9);
    WhirlOrder order = WhirlOrder::parse("1,6,4,2,5,3", 6);
    auto board = board_of(fam, "134578", order);
    SnakeDecomposition cert = build_snake_decomposition(board);
    std::string why;
    CHECK_MESSAGE(verify_snake_decomposition(cert, &why), why);
    REQUIRE(cert.snakes.size() == 6);
    CHECK(cert.compositions ==
          std::vector<std::vector<int>>{{2, 3, 1, 1, 1, 1},
                                        {3, 1, 1, 1, 1, 2},
                                        {1, 1, 1, 1, 2, 3},
                                        {1, 1, 1, 2, 3, 1},
                                        {1, 1, 2, 3, 1, 1},
                                        {1, 2, 3, 1, 1, 1}});
}

TEST_CASE("a periodic composition shortens the orbit") {
    FamilySpec fam = FamilySpec::opinj(6, 9);
    auto board = board_of(fam, "134589", WhirlOrder::identity(6));
    CHECK(board->rows() == 3);
    CHECK(row_strings(*board) == std::vector<std::string>{"134589", "234678", "125679"});
    SnakeDecomposition cert = build_snake_decomposition(board);
    CHECK(verify_snake_decomposition(cert));
    REQUIRE(cert.snakes.size() == 2);
    CHECK(cert.compositions ==
          std::vector<std::vector<int>>{{2, 1, 2, 1, 2, 1}, {1, 2, 1, 2, 1, 2}});
}

TEST_CASE("single-row snake") {
    auto board = board_of(FamilySpec::opinj(4, 4), "1234", WhirlOrder::identity(4));
    SnakeDecomposition cert = build_snake_decomposition(board);
    CHECK(cert.snakes.size() == 1);
    CHECK(cert.compositions == std::vector<std::vector<int>>{{1, 1, 1, 1}});
    CHECK(verify_snake_decomposition(cert));
}

TEST_CASE("snakes across small strictly increasing boards, and uniqueness") {
    OrderSampler sampler(23);
    for (int n = 2; n <= 4; ++n)
        for (int k = n; k <= 7; ++k) {
            FamilySpec fam = FamilySpec::opinj(n, k);
            std::vector<WhirlOrder> orders = {WhirlOrder::identity(n), WhirlOrder::reversed(n),
                                              sampler.random_order(n)};
            for (const auto& order : orders)
                for (const auto& orbit : orbit_partition(fam, order)) {
                    auto board = std::make_shared<const OrbitBoard>(orbit);
                    SnakeDecomposition cert = build_snake_decomposition(board);
                    std::string why;
                    INFO(fam.str(), " ", order.str(), " rep ",
                         orbit.representative().str(), " ", why);
                    CHECK(verify_snake_decomposition(cert, &why));

                    // walks are forced, so a different anchoring of the same
                    // orbit yields the same partition up to rotation
                    if (orbit.length() > 1) {
                        auto other = std::make_shared<const OrbitBoard>(orbit, orbit.words[1]);
                        SnakeDecomposition cert2 = build_snake_decomposition(other);
                        CHECK(cert2.snakes.size() == cert.snakes.size());
                        std::set<std::vector<int>> a(cert.compositions.begin(),
                                                     cert.compositions.end());
                        std::set<std::vector<int>> b(cert2.compositions.begin(),
                                                     cert2.compositions.end());
                        CHECK(a == b);
                    }
                }
        }
    CHECK_THROWS_AS(
        build_snake_decomposition(board_of(FamilySpec::op(3, 4), "123", WhirlOrder::identity(3))),
        WrongFamily);
}

TEST_CASE("snake verification catches an illegal move") {
    FamilySpec fam = FamilySpec::opinj(6, 9);
    WhirlOrder order = WhirlOrder::parse("1,6,4,2,5,3", 6);
    auto board = board_of(fam, "134578", order);
    SnakeDecomposition cert = build_snake_decomposition(board);
    SnakeDecomposition tampered = cert;
    std::swap(tampered.snakes[0], tampered.snakes[1]);  // ids no longer match cells
    CHECK_FALSE(verify_snake_decomposition(tampered));
    tampered = cert;
    tampered.compositions[0][0] ^= 3;
    CHECK_FALSE(verify_snake_decomposition(tampered));
}

TEST_CASE("per-column balance on strictly increasing orbits") {
    FamilySpec fam = FamilySpec::opinj(4, 7);
    OrderSampler sampler(5);
    for (const auto& order : {WhirlOrder::identity(4), sampler.random_order(4)})
        for (const auto& orbit : orbit_partition(fam, order))
            for (int j = 1; j <= 4; ++j)
                for (int r = 1; r <= 7; ++r) {
                    int lhs = 0, rhs = 0;
                    for (const auto& w : orbit.words) {
                        lhs += w(j) == r;
                        rhs += w(4 + 1 - j) == 7 + 1 - r;
                    }
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("rebuilding a board from one snake composition") {
    // the 9-row order-4123 board
    OrbitBoard board = reconstruct_orbit_from_snake({2, 1, 3, 3},
                                                    WhirlOrder::parse("4,1,2,3", 4), 4, 9);
    CHECK(row_strings(board) ==
          std::vector<std::string>{"1569", "2347", "1258", "1369", "2457", "3468", "1579",
                                   "2678", "3489"});

    // the periodic one
    OrbitBoard small = reconstruct_orbit_from_snake({2, 1, 2, 1, 2, 1},
                                                    WhirlOrder::identity(6), 6, 9);
    CHECK(row_strings(small) == std::vector<std::string>{"134589", "234678", "125679"});

    // all-ones composition gives the single fixed row
    OrbitBoard unit = reconstruct_orbit_from_snake({1, 1, 1, 1}, WhirlOrder::identity(4), 4, 4);
    CHECK(row_strings(unit) == std::vector<std::string>{"1234"});

    CHECK_THROWS_AS(reconstruct_orbit_from_snake({2, 1}, WhirlOrder::identity(2), 2, 4),
                    BadComposition);
    CHECK_THROWS_AS(reconstruct_orbit_from_snake({2, 0, 2}, WhirlOrder::identity(3), 3, 4),
                    BadComposition);
    CHECK_THROWS_AS(reconstruct_orbit_from_snake({2, 1, 3}, WhirlOrder::identity(4), 4, 9),
                    BadComposition);
}

TEST_CASE("reconstruction round-trips every snake at small sizes") {
    OrderSampler sampler(31);
    for (int n = 2; n <= 4; ++n)
        for (int k = n; k <= 6; ++k) {
            FamilySpec fam = FamilySpec::opinj(n, k);
            for (const auto& order : {WhirlOrder::identity(n), sampler.random_order(n)})
                for (const auto& orbit : orbit_partition(fam, order)) {
                    auto board = std::make_shared<const OrbitBoard>(orbit);
                    SnakeDecomposition cert = build_snake_decomposition(board);
                    OrbitBoard rebuilt =
                        reconstruct_orbit_from_snake(cert.compositions[0], order, n, k);
                    CHECK(rebuilt.rows() == board->rows());
                    // same orbit: equal word sets
                    auto lhs = row_strings(*board);
                    auto rhs = row_strings(rebuilt);
                    CHECK(std::set<std::string>(lhs.begin(), lhs.end()) ==
                          std::set<std::string>(rhs.begin(), rhs.end()));
                }
        }
}
