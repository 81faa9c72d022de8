#include "baranyai/core.hpp"

#include <set>

namespace baranyai {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

Block::Block(std::initializer_list<Point> pts) : Block(std::span<const Point>(pts.begin(), pts.size())) {}

Block::Block(std::span<const Point> pts) : size_(static_cast<std::uint8_t>(pts.size())), pts_{} {
    if (pts.size() < 2 || pts.size() > 4)
        throw std::invalid_argument("block size must be 2, 3 or 4");
    std::copy(pts.begin(), pts.end(), pts_.begin());
    std::sort(pts_.begin(), pts_.begin() + size_);
    for (int i = 1; i < size_; ++i)
        if (pts_[static_cast<std::size_t>(i - 1)] == pts_[static_cast<std::size_t>(i)])
            throw std::invalid_argument("block has a repeated point");
}

bool Block::contains(Point p) const {
    return std::binary_search(pts_.begin(), pts_.begin() + size_, p);
}

const char* design_kind_name(DesignKind kind) {
    switch (kind) {
    case DesignKind::BP: return "bp";
    case DesignKind::RSQS: return "rsqs";
    case DesignKind::OF: return "of";
    case DesignKind::NOF: return "nof";
    }
    return "?";
}

std::int64_t rank_block(const Block& b, int n) {
    for (Point p : b.points())
        if (p >= n)
            throw std::out_of_range("block point out of range");
    std::int64_t r = 0;
    for (int i = 0; i < b.size(); ++i)
        r += binomial(b[i], i + 1);
    return r;
}

Block unrank_block(std::int64_t r, int n, int k) {
    if (k < 2 || k > 4)
        throw std::invalid_argument("unrank_block: k must be 2, 3 or 4");
    if (r < 0 || r >= binomial(n, k))
        throw std::out_of_range("unrank_block: rank out of range");
    std::array<Point, 4> pts{};
    int hi = n;
    for (int i = k; i >= 1; --i) {
        // largest c with C(c,i) <= r
        int c = hi - 1;
        while (binomial(c, i) > r)
            --c;
        pts[static_cast<std::size_t>(i - 1)] = static_cast<Point>(c);
        r -= binomial(c, i);
        hi = c;
    }
    return Block(std::span<const Point>(pts.data(), static_cast<std::size_t>(k)));
}

Configuration classify_configuration(const Block& q, int t) {
    if (q.size() != 4)
        throw std::invalid_argument("classify_configuration: block size must be 4");
    Configuration c{{0, 0, 0, 0}};
    for (Point p : q.points()) {
        if (p >= 4 * t)
            throw std::out_of_range("classify_configuration: point outside Z_t x Z_4");
        ++c.j[static_cast<std::size_t>(p / t)];
    }
    return c;
}

int group_of(const Configuration& c) {
    if (c.sum() != 4)
        throw std::invalid_argument("group_of: configuration must sum to 4");
    int layers = 0, max = 0;
    for (int v : c.j) {
        if (v > 0)
            ++layers;
        max = std::max(max, v);
    }
    switch (layers) {
    case 1: return 1;                   // (4,0,0,0)-like
    case 2: return max == 3 ? 2 : 3;    // (3,1,..) vs (2,2,..)
    case 3: return 4;                   // (2,1,1,0)-like
    case 4: return 5;                   // (1,1,1,1)
    }
    throw std::logic_error("group_of: unreachable");
}

Quad Quad::from_code(std::uint32_t c, int t) {
    Quad q;
    const auto tu = static_cast<std::uint32_t>(t);
    q.x[3] = static_cast<Point>(c % tu); c /= tu;
    q.x[2] = static_cast<Point>(c % tu); c /= tu;
    q.x[1] = static_cast<Point>(c % tu); c /= tu;
    q.x[0] = static_cast<Point>(c);
    return q;
}

Block Quad::to_block(int t) const {
    return Block{flat_point(x[0], 0, t), flat_point(x[1], 1, t), flat_point(x[2], 2, t), flat_point(x[3], 3, t)};
}

Quad Quad::from_block(const Block& b, int t) {
    if (b.size() != 4)
        throw std::invalid_argument("Quad::from_block: block size must be 4");
    Quad q{};
    std::array<bool, 4> seen{};
    for (Point p : b.points()) {
        int layer = p / t;
        if (layer > 3 || seen[static_cast<std::size_t>(layer)])
            throw std::invalid_argument("Quad::from_block: block is not from configuration (1,1,1,1)");
        seen[static_cast<std::size_t>(layer)] = true;
        q.x[static_cast<std::size_t>(layer)] = static_cast<Point>(p % t);
    }
    return q;
}

Quad quad_sum(const Quad& a, const Quad& b, int t) {
    Quad r;
    for (std::size_t i = 0; i < 4; ++i)
        r.x[i] = static_cast<Point>((a.x[i] + b.x[i]) % t);
    return r;
}

std::vector<Quad> set_sum(std::span<const Quad> s1, std::span<const Quad> s2, int t) {
    std::set<std::uint32_t> codes;
    for (const Quad& a : s1)
        for (const Quad& b : s2)
            codes.insert(quad_sum(a, b, t).code(t));
    std::vector<Quad> out;
    out.reserve(codes.size());
    for (std::uint32_t c : codes)
        out.push_back(Quad::from_code(c, t));
    return out;
}

std::vector<Quad> quad_set_A(int t) {
    std::vector<Quad> s(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        s[static_cast<std::size_t>(i)] = Quad{{static_cast<Point>(i), static_cast<Point>(i),
                                               static_cast<Point>(i), static_cast<Point>(i)}};
    return s;
}

std::vector<Quad> quad_set_B(int t) {
    std::vector<Quad> s(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        s[static_cast<std::size_t>(i)] = Quad{{static_cast<Point>(i), 0, static_cast<Point>(i), 0}};
    return s;
}

std::vector<Quad> quad_set_C(int t) {
    std::vector<Quad> s(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        s[static_cast<std::size_t>(i)] = Quad{{static_cast<Point>(i), static_cast<Point>(i), 0, 0}};
    return s;
}

std::vector<Quad> quad_set_D(int t) {
    std::vector<Quad> s(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        s[static_cast<std::size_t>(i)] = Quad{{static_cast<Point>(i), 0, 0, 0}};
    return s;
}

} // namespace baranyai
