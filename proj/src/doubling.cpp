#include "baranyai/doubling.hpp"

#include <stdexcept>

namespace baranyai {

namespace {

Block labeled(std::initializer_list<std::pair<int, int>> pts, int t) {
    std::array<Point, 4> flat{};
    std::size_t i = 0;
    for (auto [x, layer] : pts)
        flat[i++] = flat_point(x, layer & 1, t);
    return Block(std::span<const Point>(flat.data(), i));
}

} // namespace

ParallelClass double_type_s(const ParallelClass& r, int innerIndex, int t) {
    if (innerIndex < 0 || innerIndex > 7)
        throw std::invalid_argument("double_type_s: inner index must be in Z_8");
    const int j2 = (innerIndex >> 2) & 1, j3 = (innerIndex >> 1) & 1, j4 = innerIndex & 1;
    ParallelClass out;
    out.blocks.reserve(r.blocks.size() * 2);
    for (const Block& b : r.blocks) {
        if (b.size() != 4)
            throw std::invalid_argument("double_type_s: blocks must be quadruples");
        out.blocks.push_back(labeled({{b[0], 0}, {b[1], j2}, {b[2], j3}, {b[3], j4}}, t));
        out.blocks.push_back(labeled({{b[0], 1}, {b[1], j2 + 1}, {b[2], j3 + 1}, {b[3], j4 + 1}}, t));
    }
    out.normalize();
    return out;
}

ParallelClass double_type_t(const ParallelClass& r, int innerIndex, int t) {
    if (innerIndex < 0 || innerIndex > 23)
        throw std::invalid_argument("double_type_t: inner index must be in Z_24");
    const int i = innerIndex >> 2, j = (innerIndex >> 1) & 1, k = innerIndex & 1;
    ParallelClass out;
    out.blocks.reserve(r.blocks.size() * 2);
    for (const Block& b : r.blocks) {
        if (b.size() != 4)
            throw std::invalid_argument("double_type_t: blocks must be quadruples");
        const int x1 = b[0], x2 = b[1], x3 = b[2], x4 = b[3];
        switch (i) {
        case 0:
            out.blocks.push_back(labeled({{x1, 0}, {x1, 1}, {x2, j}, {x3, k}}, t));
            out.blocks.push_back(labeled({{x2, j + 1}, {x3, k + 1}, {x4, 0}, {x4, 1}}, t));
            break;
        case 1:
            out.blocks.push_back(labeled({{x1, 0}, {x1, 1}, {x2, j}, {x4, k}}, t));
            out.blocks.push_back(labeled({{x2, j + 1}, {x3, 0}, {x3, 1}, {x4, k + 1}}, t));
            break;
        case 2:
            out.blocks.push_back(labeled({{x1, 0}, {x1, 1}, {x3, j}, {x4, k}}, t));
            out.blocks.push_back(labeled({{x2, 0}, {x2, 1}, {x3, j + 1}, {x4, k + 1}}, t));
            break;
        case 3:
            out.blocks.push_back(labeled({{x1, j}, {x2, 0}, {x2, 1}, {x3, k}}, t));
            out.blocks.push_back(labeled({{x1, j + 1}, {x3, k + 1}, {x4, 0}, {x4, 1}}, t));
            break;
        case 4:
            out.blocks.push_back(labeled({{x1, j}, {x2, 0}, {x2, 1}, {x4, k}}, t));
            out.blocks.push_back(labeled({{x1, j + 1}, {x3, 0}, {x3, 1}, {x4, k + 1}}, t));
            break;
        case 5:
            out.blocks.push_back(labeled({{x1, j}, {x2, k}, {x3, 0}, {x3, 1}}, t));
            out.blocks.push_back(labeled({{x1, j + 1}, {x2, k + 1}, {x4, 0}, {x4, 1}}, t));
            break;
        }
    }
    out.normalize();
    return out;
}

ParallelClass double_type_f(std::span<const VertexPair> factor, int t) {
    ParallelClass out;
    out.blocks.reserve(factor.size());
    for (const auto& [x, y] : factor)
        out.blocks.push_back(labeled({{x, 0}, {y, 0}, {x, 1}, {y, 1}}, t));
    out.normalize();
    return out;
}

Design double_design(const DoublingInput& input) {
    const int t = input.bp.n;
    if (t % 12 != 4 && t % 12 != 8)
        throw std::invalid_argument("double_design: t must be 4 or 8 (mod 12)");
    if (input.bp.k != 4 || input.rsqs.n != t || input.of.m != t)
        throw std::invalid_argument("double_design: mismatched ingredient sizes");

    Design d;
    d.kind = DesignKind::BP;
    d.n = 2 * t;
    d.k = 4;
    d.provenance = "doubling:t=" + std::to_string(t);
    d.classes.reserve(static_cast<std::size_t>(binomial(2 * t - 1, 3)));

    for (const ParallelClass& r : input.bp.classes)
        for (int i = 0; i < 8; ++i)
            d.classes.push_back(double_type_s(r, i, t));
    for (const ParallelClass& r : input.rsqs.classes)
        for (int inner = 0; inner < 24; ++inner)
            d.classes.push_back(double_type_t(r, inner, t));
    for (int f = 0; f < t - 1; ++f)
        d.classes.push_back(double_type_f(input.of.factors[static_cast<std::size_t>(f)], t));

    if (d.classes.size() != static_cast<std::size_t>(binomial(2 * t - 1, 3)))
        throw std::logic_error("double_design: class count does not match C(2t-1,3)");
    return d;
}

} // namespace baranyai
