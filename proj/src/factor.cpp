#include "baranyai/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace baranyai {

std::vector<VertexPair> near_one_factor(int m, int k) {
    std::vector<VertexPair> pairs;
    pairs.reserve(static_cast<std::size_t>((m - 1) / 2));
    for (int x = 0; x < m; ++x) {
        int y = ((2 * k - x) % m + m) % m;
        if (x < y)
            pairs.emplace_back(static_cast<Point>(x), static_cast<Point>(y));
    }
    return pairs;
}

std::vector<VertexPair> one_factor(int m, int k) {
    auto pairs = near_one_factor(m - 1, k);
    pairs.emplace_back(static_cast<Point>(k), static_cast<Point>(m - 1));
    return pairs;
}

NearOneFactorization near_one_factorization(int m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("near_one_factorization: m must be odd and >= 3");
    NearOneFactorization f;
    f.m = m;
    f.factors.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        f.factors.push_back(near_one_factor(m, k));
    return f;
}

OneFactorization one_factorization(int m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("one_factorization: m must be even and >= 2");
    OneFactorization f;
    f.m = m;
    f.factors.reserve(static_cast<std::size_t>(m - 1));
    for (int k = 0; k < m - 1; ++k)
        f.factors.push_back(one_factor(m, k));
    return f;
}

namespace {

int position_in_factor(const std::vector<VertexPair>& factor, Point lo, Point hi) {
    for (std::size_t j = 0; j < factor.size(); ++j)
        if (factor[j].first == lo && factor[j].second == hi)
            return static_cast<int>(j);
    throw std::logic_error("locate_pair: pair missing from its factor");
}

} // namespace

PairLocation locate_pair(const NearOneFactorization& f, Point x, Point y) {
    if (x == y || x >= f.m || y >= f.m)
        throw std::invalid_argument("locate_pair: not an edge of K_m");
    if (x > y)
        std::swap(x, y);
    int k = static_cast<int>((x + y) % f.m) * ((f.m + 1) / 2) % f.m; // divide by 2 mod odd m
    return {k, position_in_factor(f.factors[static_cast<std::size_t>(k)], x, y)};
}

PairLocation locate_pair(const OneFactorization& f, Point x, Point y) {
    if (x == y || x >= f.m || y >= f.m)
        throw std::invalid_argument("locate_pair: not an edge of K_m");
    if (x > y)
        std::swap(x, y);
    if (y == f.m - 1)
        return {x, f.pairs_per_factor() - 1};
    int mOdd = f.m - 1;
    int k = static_cast<int>((x + y) % mOdd) * ((mOdd + 1) / 2) % mOdd;
    return {k, position_in_factor(f.factors[static_cast<std::size_t>(k)], x, y)};
}

} // namespace baranyai
