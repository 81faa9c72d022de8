#include "baranyai/verify.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <ostream>
#include <thread>

namespace baranyai {

std::int64_t Bitset::count() const {
    std::int64_t c = 0;
    for (std::uint64_t w : words_)
        c += std::popcount(w);
    return c;
}

void Bitset::merge(const Bitset& other, std::vector<std::int64_t>& collisions) {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t both = words_[w] & other.words_[w];
        while (both) {
            int b = std::countr_zero(both);
            collisions.push_back(static_cast<std::int64_t>(w) * 64 + b);
            both &= both - 1;
        }
        words_[w] |= other.words_[w];
    }
}

void Bitset::for_each_clear(const std::function<void(std::int64_t)>& fn) const {
    for (std::int64_t i = 0; i < bits_; ++i)
        if (!test(i))
            fn(i);
}

std::optional<ClassViolation> verify_class(const ParallelClass& c, int n, int k) {
    if (k <= 0 || n % k != 0)
        return ClassViolation{0, "k does not divide n"};
    if (c.blocks.size() != static_cast<std::size_t>(n / k))
        return ClassViolation{0, "class has " + std::to_string(c.blocks.size()) + " blocks, expected " +
                                     std::to_string(n / k)};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const Block& b : c.blocks) {
        if (b.size() != k)
            return ClassViolation{0, "block of size " + std::to_string(b.size()) + ", expected " +
                                         std::to_string(k)};
        for (Point p : b.points()) {
            if (p >= n)
                return ClassViolation{0, "point " + std::to_string(p) + " out of range"};
            if (seen[p])
                return ClassViolation{0, "point " + std::to_string(p) + " duplicated"};
            seen[p] = 1;
        }
    }
    return std::nullopt; // count * k == n, so full coverage follows
}

namespace {

struct ChunkResult {
    Bitset bits;
    std::vector<ClassViolation> errors;
};

ChunkResult scan_chunk(const Design& d, int n, int k, std::size_t begin, std::size_t end,
                       std::vector<std::int64_t>& localDuplicates) {
    ChunkResult res{Bitset(binomial(n, k)), {}};
    for (std::size_t ci = begin; ci < end; ++ci) {
        if (auto v = verify_class(d.classes[ci], n, k)) {
            v->class_index = ci;
            res.errors.push_back(*v);
            continue;
        }
        for (const Block& b : d.classes[ci].blocks)
            if (res.bits.test_and_set(rank_block(b, n)))
                localDuplicates.push_back(rank_block(b, n));
    }
    return res;
}

CoverageReport coverage_scan(const Design& d, int n, int k, std::int64_t expectedClasses) {
    CoverageReport rep;
    rep.expected_classes = expectedClasses;
    rep.actual_classes = static_cast<std::int64_t>(d.classes.size());

    const std::int64_t universe = binomial(n, k);
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t nChunks = std::clamp<std::size_t>(hw ? hw : 1, 1, 8);
    if (d.classes.size() < 512)
        nChunks = 1;

    std::vector<std::vector<std::int64_t>> dupRanks(nChunks);
    std::vector<std::future<ChunkResult>> futures;
    std::size_t per = (d.classes.size() + nChunks - 1) / std::max<std::size_t>(nChunks, 1);
    for (std::size_t c = 0; c < nChunks; ++c) {
        std::size_t begin = c * per;
        std::size_t end = std::min(d.classes.size(), begin + per);
        futures.push_back(std::async(std::launch::async, [&, begin, end, c] {
            return scan_chunk(d, n, k, begin, end, dupRanks[c]);
        }));
    }

    Bitset covered(universe);
    std::vector<std::int64_t> collisions;
    for (std::size_t c = 0; c < nChunks; ++c) {
        ChunkResult r = futures[c].get();
        covered.merge(r.bits, collisions);
        for (auto& e : r.errors)
            rep.class_errors.push_back(std::move(e));
        collisions.insert(collisions.end(), dupRanks[c].begin(), dupRanks[c].end());
    }
    std::sort(rep.class_errors.begin(), rep.class_errors.end(),
              [](const auto& a, const auto& b) { return a.class_index < b.class_index; });

    rep.covered = covered.count();
    if (!collisions.empty()) {
        std::map<std::int64_t, int> mult;
        for (std::int64_t r : collisions)
            ++mult[r];
        for (auto [r, extra] : mult)
            rep.duplicated.push_back({unrank_block(r, n, k), extra + 1});
    }
    if (rep.covered != universe)
        covered.for_each_clear([&](std::int64_t r) { rep.missing.push_back(unrank_block(r, n, k)); });

    rep.ok = rep.class_errors.empty() && rep.missing.empty() && rep.duplicated.empty() &&
             rep.actual_classes == rep.expected_classes;
    return rep;
}

void print_block(std::ostream& os, const Block& b) {
    for (int i = 0; i < b.size(); ++i)
        os << (i ? " " : "") << b[i];
}

} // namespace

CoverageReport verify_bp(const Design& d, int n, int k) {
    if (k <= 0 || n % k != 0)
        throw std::invalid_argument("verify_bp: k must divide n");
    return coverage_scan(d, n, k, binomial(n - 1, k - 1));
}

CoverageReport verify_rsqs(const Design& d, int n) {
    CoverageReport rep;
    rep.expected_classes = static_cast<std::int64_t>(n - 1) * (n - 2) / 6;
    rep.actual_classes = static_cast<std::int64_t>(d.classes.size());

    for (std::size_t ci = 0; ci < d.classes.size(); ++ci)
        if (auto v = verify_class(d.classes[ci], n, 4)) {
            v->class_index = ci;
            rep.class_errors.push_back(*v);
        }

    // Steiner property: every 3-subset in exactly one block.
    Bitset covered(binomial(n, 3));
    std::vector<std::int64_t> collisions;
    for (const auto& c : d.classes)
        for (const Block& b : c.blocks)
            for (int drop = 0; drop < 4; ++drop) {
                std::array<Point, 3> tri{};
                for (int i = 0, j = 0; i < 4; ++i)
                    if (i != drop)
                        tri[static_cast<std::size_t>(j++)] = b[i];
                std::int64_t r = rank_block(Block(std::span<const Point>(tri.data(), 3)), n);
                if (covered.test_and_set(r))
                    collisions.push_back(r);
            }
    rep.covered = covered.count();
    std::map<std::int64_t, int> mult;
    for (std::int64_t r : collisions)
        ++mult[r];
    for (auto [r, extra] : mult)
        rep.duplicated.push_back({unrank_block(r, n, 3), extra + 1});
    if (rep.covered != binomial(n, 3))
        covered.for_each_clear([&](std::int64_t r) { rep.missing.push_back(unrank_block(r, n, 3)); });

    rep.ok = rep.class_errors.empty() && rep.missing.empty() && rep.duplicated.empty() &&
             rep.actual_classes == rep.expected_classes;
    return rep;
}

void CoverageReport::print(std::ostream& os) const {
    os << "OK=" << (ok ? 1 : 0) << '\n';
    os << "CLASSES=" << actual_classes << '\n';
    os << "CLASSES_EXPECTED=" << expected_classes << '\n';
    os << "COVERED=" << covered << '\n';
    os << "MISSING=" << missing.size() << '\n';
    os << "DUPLICATED=" << duplicated.size() << '\n';
    os << "CLASS_ERRORS=" << class_errors.size() << '\n';
    for (const Block& b : missing) {
        os << "MISSING_BLOCK=";
        print_block(os, b);
        os << '\n';
    }
    for (const auto& dup : duplicated) {
        os << "DUPLICATE_BLOCK=";
        print_block(os, dup.block);
        os << " x" << dup.multiplicity << '\n';
    }
    for (const auto& e : class_errors)
        os << "CLASS_ERROR=" << e.class_index << " " << e.message << '\n';
}

GroupCensus type_census(const Design& d, int t) {
    GroupCensus census;
    for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
        std::array<int, 6> g{};
        for (const Block& b : d.classes[ci].blocks)
            ++g[static_cast<std::size_t>(group_of(classify_configuration(b, t)))];
        const int total = static_cast<int>(d.classes[ci].blocks.size());
        int type = 0;
        if (g[1] > 0 && g[4] == 0)
            type = 1;
        else if (g[2] == total)
            type = 2;
        else if (g[3] + g[5] == total && g[5] <= 1)
            type = 3;
        else if (g[4] + g[5] == total && g[5] <= 1 && g[4] > 0)
            type = 4;
        else if (g[5] == total)
            type = 5;
        if (type == 0)
            census.unclassified.push_back(ci);
        else
            ++census.classes_by_type[static_cast<std::size_t>(type - 1)];
    }
    return census;
}

StfCensus stf_census(const Design& d, int t) {
    StfCensus census;
    for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
        int sig = 0;
        bool uniform = true;
        for (const Block& b : d.classes[ci].blocks) {
            std::vector<int> xs;
            for (Point p : b.points())
                xs.push_back(p % t);
            std::sort(xs.begin(), xs.end());
            int distinct = static_cast<int>(std::unique(xs.begin(), xs.end()) - xs.begin());
            if (sig == 0)
                sig = distinct;
            else if (sig != distinct)
                uniform = false;
        }
        if (!uniform || sig < 2) {
            census.unclassified.push_back(ci);
            continue;
        }
        if (sig == 4)
            ++census.type_s;
        else if (sig == 3)
            ++census.type_t;
        else
            ++census.type_f;
    }
    return census;
}

} // namespace baranyai
