#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace baranyai {

using Point = std::uint16_t;

std::int64_t binomial(std::int64_t n, std::int64_t k);

// k-subset of [0,n), stored ascending. k is 2, 3 or 4.
class Block {
public:
    Block() : size_(0), pts_{} {}
    Block(std::initializer_list<Point> pts);
    explicit Block(std::span<const Point> pts);

    int size() const { return size_; }
    Point operator[](int i) const { return pts_[static_cast<std::size_t>(i)]; }
    std::span<const Point> points() const { return {pts_.data(), static_cast<std::size_t>(size_)}; }
    bool contains(Point p) const;

    friend bool operator==(const Block&, const Block&) = default;
    friend auto operator<=>(const Block& a, const Block& b) {
        return std::lexicographical_compare_three_way(
            a.pts_.begin(), a.pts_.begin() + a.size_, b.pts_.begin(), b.pts_.begin() + b.size_);
    }

private:
    std::uint8_t size_;
    std::array<Point, 4> pts_;
};

// Blocks kept sorted by their minimum point.
struct ParallelClass {
    std::vector<Block> blocks;

    void normalize() { std::sort(blocks.begin(), blocks.end()); }
    friend bool operator==(const ParallelClass&, const ParallelClass&) = default;
};

enum class DesignKind { BP, RSQS, OF, NOF };

struct Design {
    DesignKind kind = DesignKind::BP;
    int n = 0;
    int k = 0;
    std::vector<ParallelClass> classes;
    std::string provenance;
};

const char* design_kind_name(DesignKind kind);

// Colexicographic rank of a k-subset of [0,n) among all C(n,k) of them.
std::int64_t rank_block(const Block& b, int n);
Block unrank_block(std::int64_t r, int n, int k);

// Layer occupancy (j0,j1,j2,j3) of a quadruple over Z_t x Z_4.
struct Configuration {
    std::array<int, 4> j;

    int sum() const { return j[0] + j[1] + j[2] + j[3]; }
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

Configuration classify_configuration(const Block& q, int t);
int group_of(const Configuration& c);

inline Point flat_point(int x, int layer, int t) {
    return static_cast<Point>(layer * t + x);
}

// Element (x, layer) of Z_t x Z_L, in bijection with Point via layer*t + x.
struct LabeledPoint {
    int x = 0;
    int layer = 0;

    Point to_point(int t) const { return flat_point(x, layer, t); }
    static LabeledPoint from_point(Point p, int t) { return {p % t, p / t}; }
    friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

// Quadruple from configuration (1,1,1,1): one point (x[i], i) per layer.
struct Quad {
    std::array<Point, 4> x;

    std::uint32_t code(int t) const {
        return ((static_cast<std::uint32_t>(x[0]) * t + x[1]) * t + x[2]) * t + x[3];
    }
    static Quad from_code(std::uint32_t c, int t);
    Block to_block(int t) const;
    static Quad from_block(const Block& b, int t);

    friend bool operator==(const Quad&, const Quad&) = default;
    friend auto operator<=>(const Quad&, const Quad&) = default;
};

Quad quad_sum(const Quad& a, const Quad& b, int t);
std::vector<Quad> set_sum(std::span<const Quad> s1, std::span<const Quad> s2, int t);

// The generator sets of the Type 5 sum-set algebra.
std::vector<Quad> quad_set_A(int t);
std::vector<Quad> quad_set_B(int t);
std::vector<Quad> quad_set_C(int t);
std::vector<Quad> quad_set_D(int t);

} // namespace baranyai
