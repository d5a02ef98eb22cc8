#include "whirl/certificates.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace whirl {

namespace {

inline int cyc_succ(int v, int k) { return v == k ? 1 : v + 1; }

std::int64_t cyclic_gap(const OrbitBoard& board, std::int64_t from, std::int64_t to) {
    std::int64_t m = board.cells();
    std::int64_t g = (to - from) % m;
    return g < 0 ? g + m : g;
}

std::string cell_str(const OrbitBoard& board, std::int64_t cell) {
    auto [row, col] = board.cell_at(cell);
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

// ---------------------------------------------------------------------------
// Hopcroft-Karp on the layer graph between consecutive relabeled values.
// Vertices are numbered in reading order, adjacency in reading order, so the
// output is deterministic.
// ---------------------------------------------------------------------------

class BipartiteMatcher {
public:
    BipartiteMatcher(int nleft, int nright) : adj_(nleft), pair_u_(nleft, -1), pair_v_(nright, -1) {}

    void add_edge(int u, int v) { adj_[u].push_back(v); }

    int solve() {
        int matched = 0;
        while (bfs()) {
            for (int u = 0; u < static_cast<int>(adj_.size()); ++u)
                if (pair_u_[u] < 0 && dfs(u)) ++matched;
        }
        return matched;
    }

    int matched_to(int u) const { return pair_u_[u]; }

private:
    static constexpr int kInf = INT32_MAX;

    bool bfs() {
        std::deque<int> queue;
        dist_.assign(adj_.size(), kInf);
        for (int u = 0; u < static_cast<int>(adj_.size()); ++u)
            if (pair_u_[u] < 0) {
                dist_[u] = 0;
                queue.push_back(u);
            }
        bool reachable = false;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj_[u]) {
                int w = pair_v_[v];
                if (w < 0) {
                    reachable = true;
                } else if (dist_[w] == kInf) {
                    dist_[w] = dist_[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        return reachable;
    }

    bool dfs(int u) {
        for (int v : adj_[u]) {
            int w = pair_v_[v];
            if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                pair_u_[u] = v;
                pair_v_[v] = u;
                return true;
            }
        }
        dist_[u] = kInf;
        return false;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> pair_u_, pair_v_;
    std::vector<int> dist_;
};

// Most frequent value on the board, ties to the smallest value; that value
// plays the role of 1 after relabeling.
int pick_relabel_shift(const OrbitBoard& board) {
    std::vector<std::int64_t> freq(board.family().k() + 1, 0);
    for (std::int64_t c = 0; c < board.cells(); ++c) ++freq[board.value_at(c)];
    int best = 1;
    for (int v = 2; v <= board.family().k(); ++v)
        if (freq[v] > freq[best]) best = v;
    return best - 1;
}

inline int relabeled(int value, int shift, int k) {
    int r = value - shift;
    return r < 1 ? r + k : r;
}

std::vector<std::vector<std::int64_t>> cells_by_relabeled_value(const OrbitBoard& board,
                                                                int shift) {
    const int k = board.family().k();
    std::vector<std::vector<std::int64_t>> cells(k + 1);
    for (std::int64_t c = 0; c < board.cells(); ++c)
        cells[relabeled(board.value_at(c), shift, k)].push_back(c);
    return cells;
}

ChunkPartition chunks_from_links(std::shared_ptr<const OrbitBoard> board, int shift,
                                 const std::vector<std::vector<std::int64_t>>& by_value,
                                 const std::vector<std::int64_t>& next_link) {
    const int k = board->family().k();
    ChunkPartition out{std::move(board), shift, {}, {}};
    out.chunk_of.assign(out.board->cells(), -1);
    for (std::int64_t head : by_value[1]) {
        int id = static_cast<int>(out.chunks.size());
        std::vector<std::int64_t> chunk;
        std::int64_t cell = head;
        for (int j = 1; j <= k; ++j) {
            chunk.push_back(cell);
            out.chunk_of[cell] = id;
            if (j < k) cell = next_link[cell];
        }
        out.chunks.push_back(std::move(chunk));
    }
    return out;
}

ChunkPartition build_chunks_matching(std::shared_ptr<const OrbitBoard> board) {
    const OrbitBoard& b = *board;
    const int k = b.family().k();
    const int n = b.family().n();
    int shift = pick_relabel_shift(b);
    auto by_value = cells_by_relabeled_value(b, shift);

    std::vector<std::int64_t> next_link(b.cells(), -1);
    std::vector<int> right_slot(b.cells(), -1);
    for (int j = 1; j < k; ++j) {
        const auto& left = by_value[j];
        const auto& right = by_value[j + 1];
        if (left.size() != right.size())
            throw NoPartition("value layers " + std::to_string(j) + " and " +
                              std::to_string(j + 1) + " have different sizes");
        for (size_t i = 0; i < right.size(); ++i) right_slot[right[i]] = static_cast<int>(i);

        BipartiteMatcher matcher(static_cast<int>(left.size()), static_cast<int>(right.size()));
        for (size_t u = 0; u < left.size(); ++u)
            for (int g = 1; g <= n; ++g) {
                std::int64_t cand = b.step(left[u], g);
                if (relabeled(b.value_at(cand), shift, k) == j + 1)
                    matcher.add_edge(static_cast<int>(u), right_slot[cand]);
            }
        if (matcher.solve() != static_cast<int>(left.size()))
            throw NoPartition("no perfect matching between value layers " + std::to_string(j) +
                              " and " + std::to_string(j + 1));
        for (size_t u = 0; u < left.size(); ++u)
            next_link[left[u]] = right[matcher.matched_to(static_cast<int>(u))];
    }
    return chunks_from_links(std::move(board), shift, by_value, next_link);
}

ChunkPartition build_chunks_greedy(std::shared_ptr<const OrbitBoard> board) {
    const OrbitBoard& b = *board;
    const int k = b.family().k();
    const int n = b.family().n();
    int shift = pick_relabel_shift(b);
    auto by_value = cells_by_relabeled_value(b, shift);

    std::vector<int> chunk_of(b.cells(), -1);
    std::vector<std::vector<std::int64_t>> chunks;
    std::vector<int> pending;

    // Completing a chunk may steal the tail of another, which then re-enters
    // the queue; the stolen value always re-pairs with an earlier partner, so
    // the process cannot loop.  The step bound is a hard backstop.
    std::int64_t budget = b.cells() * b.cells() + 1024;

    auto extend = [&](int id) {
        auto& chunk = chunks[id];
        while (static_cast<int>(chunk.size()) < k) {
            if (--budget < 0) throw NoPartition("chunk reassignment did not terminate");
            std::int64_t p = chunk.back();
            int j = static_cast<int>(chunk.size());
            std::int64_t chosen = -1;
            for (int g = 1; g <= n && chosen < 0; ++g) {
                std::int64_t cand = b.step(p, g);
                if (relabeled(b.value_at(cand), shift, k) == j + 1 && chunk_of[cand] < 0)
                    chosen = cand;
            }
            if (chosen >= 0) {
                chunk.push_back(chosen);
                chunk_of[chosen] = id;
                continue;
            }
            // All successors in the window are taken; steal the earliest one
            // whose current partner also sits inside the window.
            int victim = -1;
            for (int g = 1; g <= n && victim < 0; ++g) {
                std::int64_t cand = b.step(p, g);
                if (relabeled(b.value_at(cand), shift, k) != j + 1) continue;
                int owner = chunk_of[cand];
                std::int64_t partner = chunks[owner][j - 1];
                std::int64_t gap = cyclic_gap(b, p, partner);
                if (gap >= 1 && gap <= n - 1 && chunks[owner][j] == cand) victim = owner;
            }
            if (victim < 0)
                throw NoPartition("no stealable successor after cell " + cell_str(b, p));
            auto& loser = chunks[victim];
            for (size_t t = j; t < loser.size(); ++t) {
                chunk.push_back(loser[t]);
                chunk_of[loser[t]] = id;
            }
            loser.resize(j);
            pending.push_back(victim);
        }
    };

    for (std::int64_t head : by_value[1]) {
        if (chunk_of[head] >= 0) continue;
        int id = static_cast<int>(chunks.size());
        chunks.push_back({head});
        chunk_of[head] = id;
        extend(id);
        while (!pending.empty()) {
            int next = pending.back();
            pending.pop_back();
            extend(next);
        }
    }

    // Canonical ids: order chunks by their first cell.
    std::vector<int> order(chunks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int c) { return chunks[a][0] < chunks[c][0]; });
    ChunkPartition out{std::move(board), shift, {}, {}};
    out.chunk_of.assign(b.cells(), -1);
    for (int id : order) {
        for (std::int64_t cell : chunks[id])
            out.chunk_of[cell] = static_cast<int>(out.chunks.size());
        out.chunks.push_back(std::move(chunks[id]));
    }
    return out;
}

}  // namespace

ChunkPartition build_chunk_partition(std::shared_ptr<const OrbitBoard> board,
                                     ChunkMethod method) {
    if (!board) throw Error("null board");
    if (board->family().kind() != FamilyKind::InjM)
        throw WrongFamily("chunk partitions need an at-most-m family, got " +
                          board->family().str());
    return method == ChunkMethod::Matching ? build_chunks_matching(std::move(board))
                                           : build_chunks_greedy(std::move(board));
}

bool verify_chunk_partition(const ChunkPartition& partition, std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    if (!partition.board) return fail("no board");
    const OrbitBoard& b = *partition.board;
    const int k = b.family().k();
    const int n = b.family().n();
    if (partition.relabel_shift < 0 || partition.relabel_shift >= k)
        return fail("relabel shift outside [0,k-1]");
    if (partition.chunk_of.size() != static_cast<size_t>(b.cells()))
        return fail("assignment size differs from the board");

    std::vector<char> covered(b.cells(), 0);
    for (size_t id = 0; id < partition.chunks.size(); ++id) {
        const auto& chunk = partition.chunks[id];
        if (chunk.size() != static_cast<size_t>(k))
            return fail("chunk " + std::to_string(id) + " has " + std::to_string(chunk.size()) +
                        " cells, want " + std::to_string(k));
        for (int j = 1; j <= k; ++j) {
            std::int64_t cell = chunk[j - 1];
            if (cell < 0 || cell >= b.cells())
                return fail("chunk " + std::to_string(id) + " leaves the board");
            if (covered[cell])
                return fail("cell " + cell_str(b, cell) + " is in two chunks");
            covered[cell] = 1;
            if (partition.chunk_of[cell] != static_cast<int>(id))
                return fail("assignment disagrees with chunk " + std::to_string(id));
            if (relabeled(b.value_at(cell), partition.relabel_shift, k) != j)
                return fail("chunk " + std::to_string(id) + " cell " + cell_str(b, cell) +
                            " does not carry relabeled value " + std::to_string(j));
            if (j > 1) {
                std::int64_t gap = cyclic_gap(b, chunk[j - 2], cell);
                if (gap < 1 || gap > n)
                    return fail("chunk " + std::to_string(id) + " gap " + std::to_string(gap) +
                                " outside [1," + std::to_string(n) + "] before " +
                                cell_str(b, cell));
            }
        }
    }
    for (std::int64_t c = 0; c < b.cells(); ++c)
        if (!covered[c]) return fail("cell " + cell_str(b, c) + " is in no chunk");
    return true;
}

// ---------------------------------------------------------------------------
// Red-light cycles
// ---------------------------------------------------------------------------

namespace {

std::vector<char> red_lights_of(const OrbitBoard& b) {
    std::vector<char> red(b.cells(), 0);
    for (std::int64_t c = 0; c < b.cells(); ++c)
        red[c] = b.value_at(c) == b.value_at(b.step(c, b.cols()));
    return red;
}

// The next red light: the last cell among the following n-1 holding the
// cyclic successor value.
std::int64_t red_successor(const OrbitBoard& b, std::int64_t cell) {
    const int k = b.family().k();
    int target = cyc_succ(b.value_at(cell), k);
    for (int g = b.cols() - 1; g >= 1; --g) {
        std::int64_t cand = b.step(cell, g);
        if (b.value_at(cand) == target) return cand;
    }
    return -1;
}

}  // namespace

RedLightCycles build_red_light_cycles(std::shared_ptr<const OrbitBoard> board) {
    if (!board) throw Error("null board");
    const OrbitBoard& b = *board;
    if (b.family().kind() != FamilyKind::SurM || b.family().m() != 1)
        throw WrongFamily("red-light cycles need an at-least-once family, got " +
                          b.family().str());

    RedLightCycles out{std::move(board), red_lights_of(b), {}};
    std::vector<int> cycle_of(b.cells(), -1);
    for (std::int64_t start = 0; start < b.cells(); ++start) {
        if (!out.is_red[start] || cycle_of[start] >= 0) continue;
        std::vector<std::int64_t> cycle;
        std::int64_t cur = start;
        do {
            cycle_of[cur] = static_cast<int>(out.cycles.size());
            cycle.push_back(cur);
            if (b.cols() == 1) break;  // single-column board: fixed chains
            std::int64_t next = red_successor(b, cur);
            if (next < 0)
                throw BrokenChain("no successor value after " + cell_str(b, cur));
            if (!out.is_red[next])
                throw BrokenChain("successor " + cell_str(b, next) + " is not a red light");
            if (cycle_of[next] >= 0 && next != start)
                throw BrokenChain("chains merge at " + cell_str(b, next));
            cur = next;
        } while (cur != start);
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

bool verify_red_light_cycles(const RedLightCycles& cert, std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    if (!cert.board) return fail("no board");
    const OrbitBoard& b = *cert.board;
    const int k = b.family().k();

    std::vector<char> red = red_lights_of(b);
    if (red != cert.is_red) return fail("red-light set mismatch");

    std::vector<char> covered(b.cells(), 0);
    for (size_t id = 0; id < cert.cycles.size(); ++id) {
        const auto& cycle = cert.cycles[id];
        if (cycle.empty()) return fail("cycle " + std::to_string(id) + " is empty");
        std::vector<std::int64_t> counts(k + 1, 0);
        for (size_t t = 0; t < cycle.size(); ++t) {
            std::int64_t cell = cycle[t];
            if (!red[cell]) return fail(cell_str(b, cell) + " is not a red light");
            if (covered[cell]) return fail(cell_str(b, cell) + " is in two cycles");
            covered[cell] = 1;
            ++counts[b.value_at(cell)];
            if (b.cols() > 1) {
                std::int64_t next = cycle[(t + 1) % cycle.size()];
                if (red_successor(b, cell) != next)
                    return fail("successor rule broken after " + cell_str(b, cell));
            } else if (cycle.size() != 1) {
                return fail("single-column cycles must be singletons");
            }
        }
        for (int v = 1; v <= k; ++v)
            if (counts[v] * k != static_cast<std::int64_t>(cycle.size()))
                return fail("cycle " + std::to_string(id) + " has " + std::to_string(counts[v]) +
                            " cells of value " + std::to_string(v) + " out of " +
                            std::to_string(cycle.size()));
    }
    for (std::int64_t c = 0; c < b.cells(); ++c)
        if (red[c] && !covered[c]) return fail("red light " + cell_str(b, c) + " is in no cycle");
    return true;
}

// ---------------------------------------------------------------------------
// Snakes
// ---------------------------------------------------------------------------

namespace {

// position of each index within the order's application sequence
std::vector<int> sequence_positions(const WhirlOrder& order) {
    std::vector<int> pos(order.n() + 1, -1);
    const auto& seq = order.sequence();
    for (size_t t = 0; t < seq.size(); ++t) pos[seq[t]] = static_cast<int>(t);
    return pos;
}

}  // namespace

SnakeDecomposition build_snake_decomposition(std::shared_ptr<const OrbitBoard> board) {
    if (!board) throw Error("null board");
    const OrbitBoard& b = *board;
    if (b.family().kind() != FamilyKind::OPInj)
        throw WrongFamily("snakes need a strictly increasing family, got " + b.family().str());
    const int n = b.cols();
    const int k = b.family().k();
    const int rows = b.rows();
    std::vector<int> pos = sequence_positions(b.order());

    SnakeDecomposition out{std::move(board), {}, {}, {}};
    out.snake_of.assign(b.cells(), -1);

    for (int head = 0; head < rows; ++head) {
        if (b.value(head, 1) != 1) continue;
        int id = static_cast<int>(out.snakes.size());
        std::vector<std::int64_t> cells;
        std::vector<int> comp(n, 0);
        int row = head, col = 1;
        for (int r = 1; r <= k; ++r) {
            if (b.value(row % rows, col) != r)
                throw NonUniqueStep("snake value broken at " +
                                    cell_str(b, b.cell_index(row % rows, col)));
            std::int64_t cell = b.cell_index(row % rows, col);
            if (out.snake_of[cell] >= 0)
                throw NonUniqueStep("snakes overlap at " + cell_str(b, cell));
            out.snake_of[cell] = id;
            cells.push_back(cell);
            ++comp[col - 1];
            if (r == k) {
                if (col != n)
                    throw NonUniqueStep("snake ends before the last column at " +
                                        cell_str(b, cell));
                break;
            }
            // forced successor: down always competes with right (whirled at
            // col before col+1) or with diagonal (whirled after)
            bool down_ok = b.value((row + 1) % rows, col) == r + 1;
            if (col == n) {
                if (!down_ok)
                    throw NonUniqueStep("no step below " + cell_str(b, cell));
                ++row;
                continue;
            }
            bool lateral_is_right = pos[col] < pos[col + 1];
            int lat_row = lateral_is_right ? row : row + 1;
            bool lat_ok = b.value(lat_row % rows, col + 1) == r + 1;
            if (down_ok == lat_ok)
                throw NonUniqueStep(std::string(down_ok ? "ambiguous" : "missing") +
                                    " step after " + cell_str(b, cell));
            if (down_ok) {
                ++row;
            } else {
                row = lat_row;
                ++col;
            }
        }
        out.snakes.push_back(std::move(cells));
        out.compositions.push_back(std::move(comp));
    }

    for (std::int64_t c = 0; c < b.cells(); ++c)
        if (out.snake_of[c] < 0)
            throw NonUniqueStep("cell " + cell_str(b, c) + " is in no snake");
    return out;
}

bool verify_snake_decomposition(const SnakeDecomposition& dec, std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    if (!dec.board) return fail("no board");
    const OrbitBoard& b = *dec.board;
    const int n = b.cols();
    const int k = b.family().k();
    const int rows = b.rows();
    if (dec.snakes.size() != dec.compositions.size()) return fail("composition count mismatch");
    std::vector<int> pos = sequence_positions(b.order());

    std::vector<char> covered(b.cells(), 0);
    for (size_t id = 0; id < dec.snakes.size(); ++id) {
        const auto& snake = dec.snakes[id];
        if (snake.size() != static_cast<size_t>(k))
            return fail("snake " + std::to_string(id) + " has " + std::to_string(snake.size()) +
                        " cells, want " + std::to_string(k));
        std::vector<int> comp(n, 0);
        for (int r = 1; r <= k; ++r) {
            std::int64_t cell = snake[r - 1];
            auto [row, col] = b.cell_at(cell);
            if (covered[cell]) return fail(cell_str(b, cell) + " is in two snakes");
            covered[cell] = 1;
            if (dec.snake_of[cell] != static_cast<int>(id))
                return fail("assignment disagrees with snake " + std::to_string(id));
            if (b.value(row, col) != r)
                return fail("snake " + std::to_string(id) + " does not carry value " +
                            std::to_string(r) + " at " + cell_str(b, cell));
            if (r == 1 && col != 1) return fail("snake " + std::to_string(id) + " starts off-column");
            if (r == k && col != n) return fail("snake " + std::to_string(id) + " ends off-column");
            if (r > 1) {
                auto [prow, pcol] = b.cell_at(snake[r - 2]);
                int drow = (row - prow + rows) % rows;
                int dcol = col - pcol;
                // On a one-row board a lateral step is a right move and a
                // diagonal at once; accept whichever the order permits.
                bool ok = false;
                if (dcol == 0) {
                    ok = rows > 1 && drow == 1;  // down
                } else if (dcol == 1) {
                    bool right = pos[pcol] < pos[pcol + 1] && drow == 0;
                    bool diag = pos[pcol] > pos[pcol + 1] && drow == 1 % rows;
                    ok = right || diag;
                }
                if (!ok) return fail("illegal step into " + cell_str(b, cell));
            }
            ++comp[col - 1];
        }
        if (comp != dec.compositions[id])
            return fail("stored composition of snake " + std::to_string(id) + " is wrong");
        int total = 0;
        for (int c : comp) {
            if (c < 1) return fail("snake " + std::to_string(id) + " misses a column");
            total += c;
        }
        if (total != k) return fail("composition of snake " + std::to_string(id) +
                                    " does not sum to k");
    }
    for (std::int64_t c = 0; c < b.cells(); ++c)
        if (!covered[c]) return fail("cell " + cell_str(b, c) + " is in no snake");

    // Down the first column, consecutive snakes carry left cyclic shifts.
    std::vector<std::pair<int, size_t>> heads;  // (row of the 1, snake id)
    for (size_t id = 0; id < dec.snakes.size(); ++id)
        heads.emplace_back(b.cell_at(dec.snakes[id][0]).first, id);
    std::sort(heads.begin(), heads.end());
    for (size_t t = 0; t < heads.size(); ++t) {
        const auto& cur = dec.compositions[heads[t].second];
        const auto& nxt = dec.compositions[heads[(t + 1) % heads.size()].second];
        std::vector<int> shifted(cur.begin() + 1, cur.end());
        shifted.push_back(cur.front());
        if (shifted != nxt)
            return fail("snake after row " + std::to_string(heads[t].first) +
                        " is not the left cyclic shift of its predecessor");
        int expected_row = (heads[t].first + cur.front()) % rows;
        if (heads[(t + 1) % heads.size()].first != expected_row && heads.size() > 1)
            return fail("snake heads are not spaced by the first composition part");
        if (heads.size() == 1 && cur.front() != rows)
            return fail("single snake must span all rows in the first column");
    }
    return true;
}

// ---------------------------------------------------------------------------
// Orbit reconstruction from one snake composition
// ---------------------------------------------------------------------------

OrbitBoard reconstruct_orbit_from_snake(const std::vector<int>& composition,
                                        const WhirlOrder& order, int n, int k) {
    if (static_cast<int>(composition.size()) != n)
        throw BadComposition("composition needs exactly " + std::to_string(n) + " parts");
    int sum = 0;
    for (int c : composition) {
        if (c < 1) throw BadComposition("composition parts must be positive");
        sum += c;
    }
    if (sum != k)
        throw BadComposition("composition sums to " + std::to_string(sum) + ", want " +
                             std::to_string(k));
    if (order.n() != n || !order.full_domain())
        throw BadComposition("order must permute [1.." + std::to_string(n) + "]");

    // Period of the composition under left cyclic shifts; the orbit length is
    // the heads' total descent over one period.
    int period = n;
    for (int p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = composition[i] == composition[(i + p) % n];
        if (ok) { period = p; break; }
    }
    int length = 0;
    for (int s = 0; s < period; ++s) length += composition[s];

    std::vector<int> pos = sequence_positions(order);
    std::vector<std::vector<int>> grid(length, std::vector<int>(n, 0));

    int head = 0;
    for (int s = 0; s < period; ++s) {
        int row = head;
        int value = 1;
        for (int col = 1; col <= n; ++col) {
            if (col > 1 && pos[col - 1] > pos[col]) ++row;  // diagonal entry
            int parts = composition[(s + col - 1) % n];
            for (int t = 0; t < parts; ++t) {
                int r = (row + t) % length;
                if (grid[r][col - 1] != 0)
                    throw BadComposition("snakes collide while laying the board");
                grid[r][col - 1] = value++;
            }
            row = (row + parts - 1) % length;
        }
        head += composition[s];
    }

    FamilySpec family = FamilySpec::opinj(n, k);
    std::vector<FunctionWord> laid;
    laid.reserve(length);
    for (int r = 0; r < length; ++r) {
        for (int v : grid[r])
            if (v == 0) throw BadComposition("the laid snakes leave a hole");
        laid.emplace_back(n, k, grid[r]);
        if (!is_member(family, laid.back()))
            throw BadComposition("row " + laid.back().str() + " is not strictly increasing");
    }

    // The rows must really be successive whirl images.
    Orbit orbit = orbit_of(family, laid.front(), order);
    if (orbit.length() != static_cast<std::uint64_t>(length))
        throw BadComposition("laid board length differs from the true orbit");
    OrbitBoard result(std::move(orbit), laid.front());
    for (int r = 0; r < length; ++r)
        if (result.row_word(r) != laid[r])
            throw BadComposition("laid board is not the orbit of its first row");
    return result;
}

}  // namespace whirl
