#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "baranyai/core.hpp"

namespace baranyai {

using VertexPair = std::pair<Point, Point>; // stored (lo, hi)

// Near-one-factorization of K_m, m odd: factor k holds the pairs with
// x+y = 2k (mod m), ordered by smaller element; vertex k is isolated.
struct NearOneFactorization {
    int m = 0;
    std::vector<std::vector<VertexPair>> factors; // m factors of (m-1)/2 pairs

    int pairs_per_factor() const { return (m - 1) / 2; }
    const VertexPair& pair(int factor, int pos) const {
        return factors[static_cast<std::size_t>(factor)][static_cast<std::size_t>(pos)];
    }
};

// One-factorization of K_m, m even, from the near-one-factorization of
// K_{m-1}: factor k is the near factor with {k, m-1} appended last.
struct OneFactorization {
    int m = 0;
    std::vector<std::vector<VertexPair>> factors; // m-1 factors of m/2 pairs

    int pairs_per_factor() const { return m / 2; }
    const VertexPair& pair(int factor, int pos) const {
        return factors[static_cast<std::size_t>(factor)][static_cast<std::size_t>(pos)];
    }
};

NearOneFactorization near_one_factorization(int m);
OneFactorization one_factorization(int m);

// Builds factor k alone, without materializing the rest.
std::vector<VertexPair> near_one_factor(int m, int k);
std::vector<VertexPair> one_factor(int m, int k);

struct PairLocation {
    int factor = 0;
    int position = 0;
    friend bool operator==(const PairLocation&, const PairLocation&) = default;
};

PairLocation locate_pair(const NearOneFactorization& f, Point x, Point y);
PairLocation locate_pair(const OneFactorization& f, Point x, Point y);

} // namespace baranyai
