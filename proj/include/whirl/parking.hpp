#pragma once

#include <string>
#include <utility>
#include <vector>

#include "whirl/orbit.hpp"

namespace whirl {

// Parking-function specifics.  Products of permutation cycles are performed
// RIGHT-TO-LEFT throughout this module: (a b)(c d) means apply (c d) first.
// The distinguished (n+1)-cycle is the map x -> x-1 with 1 -> n+1.

// ---------------------------------------------------------------------------
// TranspositionFactorization: n transpositions over [n+1] whose right-to-left
// product is the distinguished cycle; the lesser entries spell a parking
// function.
// ---------------------------------------------------------------------------

struct TranspositionFactorization {
    int n = 0;
    std::vector<std::pair<int, int>> cycles;  // each (a, b) with a < b

    // "(45)(37)(12)(47)(13)(67)"; comma-separated entries once n+1 > 9.
    std::string str() const;
    static TranspositionFactorization parse(std::string_view text);

    bool operator==(const TranspositionFactorization& o) const {
        return n == o.n && cycles == o.cycles;
    }
};

// The distinguished cycle as a permutation array: image[x-1] = x-1 (1 -> n+1).
std::vector<int> downward_cycle(int n);

// Right-to-left product of the transpositions as a permutation array of [n+1].
std::vector<int> transposition_product(int n, const std::vector<std::pair<int, int>>& cycles);

// Throws BadProduct unless the factorization multiplies to the distinguished
// cycle (entry ranges and a < b included).
void validate_factorization(const TranspositionFactorization& fac);

// ---------------------------------------------------------------------------
// Operations.
// ---------------------------------------------------------------------------

// Whirl at index 1, then rotate the first digit to the end; its n-th power is
// the full left-to-right whirl.
FunctionWord wbar(const FunctionWord& f);

// Recovers the factorization by scanning the whirl orbit of f: each column's
// unknown larger entry is pinned by the rows where the column shows a 1.
TranspositionFactorization park_to_factorization(const FunctionWord& f);

// The lesser entries, validated against the product.
FunctionWord factorization_to_park(const TranspositionFactorization& fac);

// Moves the first cycle to the end and conjugates it by the distinguished
// cycle (adds 1 mod n+1 to both entries); corresponds to wbar on words.
TranspositionFactorization conjugate_factorization(const TranspositionFactorization& fac);

// ---------------------------------------------------------------------------
// LabeledTree: edge i joins a_i and b_i on a circle of n+1 clockwise points;
// edges never cross and labels increase clockwise around every vertex.
// ---------------------------------------------------------------------------

struct LabeledTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // edges[i] is the edge labeled i+1
};

// Throws NotTree / Crossing / LabelOrder when the respective property fails.
void verify_labeled_tree(const LabeledTree& tree);

LabeledTree factorization_to_tree(const TranspositionFactorization& fac);

}  // namespace whirl
