#include "baranyai/enumcode.hpp"

#include <stdexcept>

#include "baranyai/doubling.hpp"
#include "baranyai/factor.hpp"
#include "baranyai/seeds.hpp"

namespace baranyai {

bool in_doubling_chain(int n) {
    if (n == 4 || n == 8)
        return true;
    if (n < 16 || n % 2 != 0)
        return false;
    return (n & (n - 1)) == 0; // 16, 32, 64, ...
}

ParallelClass column(int n, std::int64_t i) {
    if (!in_doubling_chain(n))
        throw std::invalid_argument("column: n is not in the doubling chain");
    if (i < 1 || i > binomial(n - 1, 3))
        throw std::out_of_range("column: index out of range");

    if (n == 4) {
        ParallelClass c;
        c.blocks.push_back(Block{0, 1, 2, 3});
        return c;
    }
    if (n == 8) {
        // complement pairs ordered by the colex rank of the block through 0
        Block zeroSide = unrank_block(i - 1, 7, 3);
        std::array<Point, 4> first{0, static_cast<Point>(zeroSide[0] + 1),
                                   static_cast<Point>(zeroSide[1] + 1),
                                   static_cast<Point>(zeroSide[2] + 1)};
        std::array<Point, 4> rest{};
        std::size_t ri = 0;
        for (Point p = 1; p < 8; ++p) {
            bool used = false;
            for (Point q : first)
                used |= q == p;
            if (!used)
                rest[ri++] = p;
        }
        ParallelClass c;
        c.blocks.push_back(Block(std::span<const Point>(first.data(), 4)));
        c.blocks.push_back(Block(std::span<const Point>(rest.data(), 4)));
        c.normalize();
        return c;
    }

    const int m = n / 2;
    const std::int64_t sCount = 8 * binomial(m - 1, 3);
    const std::int64_t tCount = 4ll * (m - 1) * (m - 2);

    if (i <= sCount) {
        ParallelClass parent = column(m, (i + 7) / 8);
        return double_type_s(parent, static_cast<int>((i - 1) % 8), m);
    }
    if (i <= sCount + tCount) {
        const std::int64_t off = i - sCount;
        ParallelClass parent = seeds::rsqs_class(m, (off + 23) / 24 - 1);
        return double_type_t(parent, static_cast<int>((off - 1) % 24), m);
    }
    const std::int64_t f = i - sCount - tCount - 1;
    const auto factor = one_factor(m, static_cast<int>(f));
    return double_type_f(factor, m);
}

Block entry(int n, std::int64_t i, std::int64_t j) {
    if (j < 1 || j > n / 4)
        throw std::out_of_range("entry: block index out of range");
    ParallelClass c = column(n, i);
    return c.blocks[static_cast<std::size_t>(j - 1)];
}

} // namespace baranyai
