#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "whirl/orbit.hpp"

namespace whirl {

// Executable counterparts of the structural facts behind the homomesy
// results: each builder constructs a witness object on an orbit board and
// each verifier re-checks it from scratch.  A builder failing on a legal
// board means the underlying theorem (or this code) is wrong, so failures
// throw instead of degrading.

// ---------------------------------------------------------------------------
// [k]-chunks on InjM boards: a partition of the cells into groups carrying
// the relabeled values 1..k, each value at most n reading-order steps after
// its predecessor.
// ---------------------------------------------------------------------------

struct ChunkPartition {
    std::shared_ptr<const OrbitBoard> board;
    // Values are renamed so relabel_shift+1 plays the role of 1.
    int relabel_shift = 0;
    std::vector<int> chunk_of;                     // cell index -> chunk id
    std::vector<std::vector<std::int64_t>> chunks; // chunk id -> cells ordered by relabeled value
};

enum class ChunkMethod {
    Matching,  // layered maximum bipartite matching (canonical)
    Greedy,    // scan-and-reassign procedure, kept for fidelity testing
};

ChunkPartition build_chunk_partition(std::shared_ptr<const OrbitBoard> board,
                                     ChunkMethod method = ChunkMethod::Matching);

bool verify_chunk_partition(const ChunkPartition& partition,
                            std::string* diagnostic = nullptr);

// ---------------------------------------------------------------------------
// Red-light cycles on Sur_1 boards.  A cell is a red light when the cell
// directly below holds the same value; red lights chain into cycles whose
// values are equidistributed over [k].
// ---------------------------------------------------------------------------

struct RedLightCycles {
    std::shared_ptr<const OrbitBoard> board;
    std::vector<char> is_red;                       // per cell
    std::vector<std::vector<std::int64_t>> cycles;  // disjoint, cover all red lights
};

RedLightCycles build_red_light_cycles(std::shared_ptr<const OrbitBoard> board);

bool verify_red_light_cycles(const RedLightCycles& cert, std::string* diagnostic = nullptr);

// ---------------------------------------------------------------------------
// Snakes on OPInj boards: forced monotone paths carrying 1..k from the first
// to the last column; one composition of k into n parts per snake, and
// consecutive snakes carry left cyclic shifts of it.
// ---------------------------------------------------------------------------

struct SnakeDecomposition {
    std::shared_ptr<const OrbitBoard> board;
    std::vector<int> snake_of;                      // cell index -> snake id
    std::vector<std::vector<std::int64_t>> snakes;  // snake id -> cells ordered by value 1..k
    std::vector<std::vector<int>> compositions;     // snake id -> cells per column
};

SnakeDecomposition build_snake_decomposition(std::shared_ptr<const OrbitBoard> board);

bool verify_snake_decomposition(const SnakeDecomposition& dec,
                                std::string* diagnostic = nullptr);

// Lays snakes for successive left cyclic shifts of the composition until it
// recurs; the rows of the resulting board form a genuine orbit (verified).
OrbitBoard reconstruct_orbit_from_snake(const std::vector<int>& composition,
                                        const WhirlOrder& order, int n, int k);

}  // namespace whirl
