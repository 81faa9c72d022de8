#include "baranyai/quadrupling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "baranyai/doubling.hpp"
#include "baranyai/latin.hpp"
#include "baranyai/seeds.hpp"

namespace baranyai {

namespace {

int mod(int a, int m) { return (a % m + m) % m; }

Block labeled4(int x0, int l0, int x1, int l1, int x2, int l2, int x3, int l3, int t) {
    return Block{flat_point(x0, l0, t), flat_point(x1, l1, t), flat_point(x2, l2, t),
                 flat_point(x3, l3, t)};
}

// Sort key for generator quadruples: colex order of the flat encoding, i.e.
// compare layer-3 coordinates first.
struct ColexQuadLess {
    bool operator()(const Quad& a, const Quad& b) const {
        for (int i = 3; i >= 0; --i)
            if (a.x[static_cast<std::size_t>(i)] != b.x[static_cast<std::size_t>(i)])
                return a.x[static_cast<std::size_t>(i)] < b.x[static_cast<std::size_t>(i)];
        return false;
    }
};

int delta1(int t) { return mod(-t, 4); }

} // namespace

// --- Type 1 ----------------------------------------------------------------

std::vector<ParallelClass> type1_classes(const QuadInput& input) {
    const int t = input.t;
    const int residue = t % 4;
    if (input.bp4.n != t + delta1(t) || input.bp4.k != 4)
        throw std::invalid_argument("type1_classes: bp4 must be a BP(t+d1,4)");

    const Point omega1 = static_cast<Point>(t), omega2 = static_cast<Point>(t + 1),
                omega3 = static_cast<Point>(t + 2);
    std::vector<ParallelClass> out;
    out.reserve(input.bp4.classes.size());

    for (const ParallelClass& r : input.bp4.classes) {
        ParallelClass c;
        for (const Block& b : r.blocks) {
            int omegas = 0;
            for (Point p : b.points())
                if (p >= t)
                    ++omegas;
            if (omegas == 0) {
                for (int i = 0; i < 4; ++i)
                    c.blocks.push_back(labeled4(b[0], i, b[1], i, b[2], i, b[3], i, t));
            } else if (omegas == 1) {
                // three quadruples; the layer-3 companion cycles by a shift
                // depending on which extension point closed the block
                int shift;
                if (residue == 1)
                    shift = b[3] == omega3 ? 0 : (b[3] == omega2 ? 1 : 2);
                else
                    shift = b[3] == omega2 ? 1 : 0;
                for (int i = 0; i < 3; ++i)
                    c.blocks.push_back(labeled4(b[0], i, b[1], i, b[2], i, b[(i + shift) % 3], 3, t));
            } else if (omegas == 2) {
                std::array<std::array<int, 2>, 2> layerPairs{};
                if (residue == 2) {
                    layerPairs = {{{0, 1}, {2, 3}}};
                } else {
                    if (b[2] == omega2 && b[3] == omega3)
                        layerPairs = {{{0, 1}, {2, 3}}};
                    else if (b[2] == omega1 && b[3] == omega3)
                        layerPairs = {{{0, 3}, {1, 2}}};
                    else
                        layerPairs = {{{0, 2}, {1, 3}}};
                }
                for (const auto& [la, lb] : layerPairs)
                    c.blocks.push_back(labeled4(b[0], la, b[1], la, b[0], lb, b[1], lb, t));
            } else {
                c.blocks.push_back(labeled4(b[0], 0, b[0], 1, b[0], 2, b[0], 3, t));
            }
        }
        c.normalize();
        out.push_back(std::move(c));
    }
    return out;
}

// --- Type 2 ----------------------------------------------------------------

std::vector<ParallelClass> type2_classes(const QuadInput& input) {
    const int t = input.t;
    if (t % 3 != 0)
        throw std::invalid_argument("type2_classes: t must be divisible by 3");
    if (input.bp3.n != t || input.bp3.k != 3)
        throw std::invalid_argument("type2_classes: bp3 must be a BP(t,3)");
    const int residue = t % 4;
    const int pre = type2_predetermined_rows(residue);

    std::vector<ParallelClass> out;
    out.reserve(input.bp3.classes.size() * static_cast<std::size_t>(4 * t - pre));

    for (const ParallelClass& r : input.bp3.classes) {
        const LatinSquare m = type2_matrix(r, t, residue);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < 3; ++j) {
                ParallelClass c;
                for (std::size_t bm = 0; bm < r.blocks.size(); ++bm) {
                    const Block& b = r.blocks[bm];
                    for (int s = 0; s < 4; ++s) {
                        if (s == j)
                            continue;
                        int phi = s - (s > j ? 1 : 0);
                        c.blocks.push_back(labeled4(b[0], s, b[1], s, b[2], s,
                                                    m.at(i, static_cast<int>(3 * bm) + phi), j, t));
                    }
                }
                c.normalize();
                out.push_back(std::move(c));
            }
        for (int i = pre; i < t; ++i) {
            ParallelClass c;
            for (std::size_t bm = 0; bm < r.blocks.size(); ++bm) {
                const Block& b = r.blocks[bm];
                for (int s = 0; s < 3; ++s)
                    c.blocks.push_back(
                        labeled4(b[0], s, b[1], s, b[2], s, m.at(i, static_cast<int>(3 * bm) + s), 3, t));
            }
            c.normalize();
            out.push_back(std::move(c));
        }
    }
    return out;
}

// --- Type 3 ----------------------------------------------------------------

namespace {
constexpr std::array<std::array<int, 4>, 3> kType3Patterns{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
}

std::vector<ParallelClass> type3_even(int t, const OneFactorization& of, bool skipTypeOneCovered) {
    if (t % 2 != 0 || of.m != t)
        throw std::invalid_argument("type3_even: t must be even and match the factorization");
    const int half = t / 2;
    std::vector<ParallelClass> out;
    for (std::size_t pat = 0; pat < kType3Patterns.size(); ++pat) {
        const auto [a, b, cLayer, d] = kType3Patterns[pat];
        for (int i = 0; i < t - 1; ++i)
            for (int s = 0; s < t - 1; ++s)
                for (int r = 0; r < half; ++r) {
                    if (skipTypeOneCovered && pat == 0 && i == s && r == 0)
                        continue;
                    ParallelClass c;
                    for (int j = 0; j < half; ++j) {
                        const auto& [x, y] = of.pair(i, j);
                        const auto& [z, v] = of.pair(s, (j + r) % half);
                        c.blocks.push_back(labeled4(x, a, y, a, z, b, v, b, t));
                        c.blocks.push_back(labeled4(x, cLayer, y, cLayer, z, d, v, d, t));
                    }
                    c.normalize();
                    out.push_back(std::move(c));
                }
    }
    return out;
}

std::vector<ParallelClass> type3_odd(int t, const NearOneFactorization& nof,
                                     const std::array<GeneratorSet, 3>& gsets) {
    if (t % 2 == 0 || nof.m != t)
        throw std::invalid_argument("type3_odd: t must be odd and match the factorization");
    const int np = (t - 1) / 2;
    std::vector<ParallelClass> out;

    for (const GeneratorSet& gs : gsets) {
        auto pairKey = [&](const Quad& q, const std::array<int, 2>& layers) {
            return static_cast<std::uint32_t>(q.x[static_cast<std::size_t>(layers[0])]) * t +
                   q.x[static_cast<std::size_t>(layers[1])];
        };
        std::unordered_map<std::uint32_t, int> countA, countB;
        for (const Quad& s : gs.preSeeded) {
            ++countA[pairKey(s, gs.pairA)];
            ++countB[pairKey(s, gs.pairB)];
        }
        std::vector<Quad> gens = gs.generators;
        std::sort(gens.begin(), gens.end(), ColexQuadLess{});

        for (const Quad& g : gens) {
            const int r = countA[pairKey(g, gs.pairA)]++;
            const int s = countB[pairKey(g, gs.pairB)]++;
            if (r >= np || s >= np)
                throw std::invalid_argument("type3_odd: generator pair frequency exceeds (t-1)/2");
            ParallelClass c;
            c.blocks.push_back(g.to_block(t));
            const auto [a0, a1] = gs.pairA;
            const auto [b0, b1] = gs.pairB;
            for (int p = 0; p < np; ++p) {
                const auto& [x, y] = nof.pair(g.x[static_cast<std::size_t>(a0)], p);
                const auto& [z, v] = nof.pair(g.x[static_cast<std::size_t>(a1)], (p + r) % np);
                c.blocks.push_back(labeled4(x, a0, y, a0, z, a1, v, a1, t));
            }
            for (int p = 0; p < np; ++p) {
                const auto& [x, y] = nof.pair(g.x[static_cast<std::size_t>(b0)], p);
                const auto& [z, v] = nof.pair(g.x[static_cast<std::size_t>(b1)], (p + s) % np);
                c.blocks.push_back(labeled4(x, b0, y, b0, z, b1, v, b1, t));
            }
            c.normalize();
            out.push_back(std::move(c));
        }

        for (const auto& [key, cnt] : countA)
            if (cnt != np)
                throw std::invalid_argument("type3_odd: pair frequency property violated");
        for (const auto& [key, cnt] : countB)
            if (cnt != np)
                throw std::invalid_argument("type3_odd: pair frequency property violated");
    }
    return out;
}

// --- Type 4 ----------------------------------------------------------------

namespace {

// Layer roles of the six Group 4 configuration pairs: {doubled, doubled},
// {single, single}.
struct FamilyRoles {
    int d1, d2, s1, s2;
};
constexpr std::array<FamilyRoles, 6> kFamilies{{{0, 3, 1, 2},
                                                {0, 2, 1, 3},
                                                {0, 1, 2, 3},
                                                {1, 2, 0, 3},
                                                {1, 3, 0, 2},
                                                {2, 3, 0, 1}}};

Block family_block_pair(const FamilyRoles& f, int u, int v, bool minusSide, int w1, int w2, int t) {
    // pair {u,v} in the doubled layer, singles (w1,s1),(w2,s2)
    int d = minusSide ? f.d2 : f.d1;
    return Block{flat_point(u, d, t), flat_point(v, d, t), flat_point(mod(w1, t), f.s1, t),
                 flat_point(mod(w2, t), f.s2, t)};
}

} // namespace

std::vector<ParallelClass> type4_even(int t, const OneFactorization& of) {
    if (t % 2 != 0 || of.m != t)
        throw std::invalid_argument("type4_even: t must be even and match the factorization");
    const int half = t / 2;
    std::vector<ParallelClass> out;
    out.reserve(static_cast<std::size_t>(6) * (t - 1) * t * t);
    for (const FamilyRoles& fam : kFamilies)
        for (int i = 0; i < t - 1; ++i)
            for (int j = 0; j < t; ++j)
                for (int k = 0; k < t; ++k) {
                    ParallelClass c;
                    for (int r = 0; r < half; ++r) {
                        const auto& [x, y] = of.pair(i, r);
                        c.blocks.push_back(family_block_pair(fam, x, y, false, j + r, k + r, t));
                        c.blocks.push_back(family_block_pair(fam, x, y, true, j - r - 1, k - r - 1, t));
                    }
                    c.normalize();
                    out.push_back(std::move(c));
                }
    return out;
}

std::vector<ParallelClass> type4_odd(int t, const NearOneFactorization& nof,
                                     const std::array<std::vector<Quad>, 6>& hsets) {
    if (t % 2 == 0 || nof.m != t)
        throw std::invalid_argument("type4_odd: t must be odd and match the factorization");
    const int np = (t - 1) / 2;
    std::vector<ParallelClass> out;
    out.reserve(static_cast<std::size_t>(6) * t * t * t);
    for (std::size_t fi = 0; fi < kFamilies.size(); ++fi) {
        const FamilyRoles& fam = kFamilies[fi];
        std::vector<Quad> gens = hsets[fi];
        std::sort(gens.begin(), gens.end(), ColexQuadLess{});
        for (const Quad& g : gens) {
            const int fd1 = g.x[static_cast<std::size_t>(fam.d1)];
            const int fd2 = g.x[static_cast<std::size_t>(fam.d2)];
            const int w1 = g.x[static_cast<std::size_t>(fam.s1)];
            const int w2 = g.x[static_cast<std::size_t>(fam.s2)];
            ParallelClass c;
            c.blocks.push_back(g.to_block(t));
            for (int r = 0; r < np; ++r) {
                const auto& [x, y] = nof.pair(fd1, r);
                c.blocks.push_back(family_block_pair(fam, x, y, false, w1 + r + 1, w2 + r + 1, t));
            }
            for (int r = 0; r < np; ++r) {
                const auto& [x, y] = nof.pair(fd2, r);
                c.blocks.push_back(family_block_pair(fam, x, y, true, w1 - r - 1, w2 - r - 1, t));
            }
            c.normalize();
            out.push_back(std::move(c));
        }
    }
    return out;
}

// --- L sets and Type 5 -----------------------------------------------------

namespace {

std::vector<Quad> shift_range_layer0(int from, int to, int t, std::optional<int> skip = std::nullopt) {
    std::vector<Quad> s;
    for (int i = from; i <= to; ++i) {
        if (skip && i == *skip)
            continue;
        s.push_back(Quad{{static_cast<Point>(mod(i, t)), 0, 0, 0}});
    }
    return s;
}

std::vector<Quad> diag01_range(int from, int to, int t, std::optional<int> skip = std::nullopt) {
    std::vector<Quad> s;
    for (int i = from; i <= to; ++i) {
        if (skip && i == *skip)
            continue;
        Point p = static_cast<Point>(mod(i, t));
        s.push_back(Quad{{p, p, 0, 0}});
    }
    return s;
}

std::vector<Quad> diag02_range(int from, int to, int t) {
    std::vector<Quad> s;
    for (int i = from; i <= to; ++i) {
        Point p = static_cast<Point>(mod(i, t));
        s.push_back(Quad{{p, 0, p, 0}});
    }
    return s;
}

std::vector<Quad> remainder_set(int t, const std::array<std::vector<Quad>, 5>& L, int upto) {
    std::vector<char> member(static_cast<std::size_t>(t) * t * t * t, 0);
    for (int i = 0; i < upto; ++i)
        for (const Quad& q : L[static_cast<std::size_t>(i)]) {
            char& m = member[q.code(t)];
            if (m)
                throw std::logic_error("L sets are not pairwise disjoint");
            m = 1;
        }
    std::vector<Quad> rest;
    for (std::uint32_t code = 0; code < member.size(); ++code)
        if (!member[code])
            rest.push_back(Quad::from_code(code, t));
    return rest;
}

} // namespace

LSets build_L_sets(int t) {
    if (t % 2 == 0 || t < 15)
        throw std::invalid_argument("build_L_sets: t must be odd and at least 15");
    LSets sets;
    sets.t = t;
    sets.prime = false;

    const auto A = quad_set_A(t), B = quad_set_B(t), C = quad_set_C(t);
    const auto AB = set_sum(A, B, t);
    const auto ABC = set_sum(AB, C, t);

    for (int i = 1; i <= 6; ++i) {
        std::vector<Quad> shift{Quad{{static_cast<Point>(i), 0, 0, 0}}};
        sets.H[static_cast<std::size_t>(i - 1)] = set_sum(shift, ABC, t);
        auto& l1 = sets.L[0];
        const auto& h = sets.H[static_cast<std::size_t>(i - 1)];
        l1.insert(l1.end(), h.begin(), h.end());
    }
    sets.L[1] = set_sum(diag01_range(1, (t - 1) / 2, t), AB, t);
    sets.L[2] = set_sum(diag01_range((t + 1) / 2, t - 1, t), AB, t);
    sets.L[3] = set_sum(shift_range_layer0(7, (t + 11) / 2, t), set_sum(A, C, t), t);
    sets.L[4] = remainder_set(t, sets.L, 4);
    return sets;
}

LSets build_Lprime_sets(int t) {
    if (t % 12 != 9 || t < 21)
        throw std::invalid_argument("build_Lprime_sets: t must be 9 (mod 12) and at least 21");
    LSets sets;
    sets.t = t;
    sets.prime = true;

    const auto A = quad_set_A(t), B = quad_set_B(t), C = quad_set_C(t);
    const auto AB = set_sum(A, B, t);
    const auto ABC = set_sum(AB, C, t);

    for (int i = 1; i <= 6; ++i) {
        std::vector<Quad> shift{Quad{{static_cast<Point>(i), 0, 0, 0}}};
        sets.H[static_cast<std::size_t>(i - 1)] = set_sum(shift, ABC, t);
        auto& l1 = sets.L[0];
        const auto& h = sets.H[static_cast<std::size_t>(i - 1)];
        l1.insert(l1.end(), h.begin(), h.end());
    }

    sets.L[1] = set_sum(diag01_range(1, (t - 1) / 2, t), AB, t);

    {
        std::vector<Quad> minusOne{Quad{{static_cast<Point>(t - 1), 0, 0, 0}}};
        sets.L[2] = set_sum(minusOne, set_sum(diag01_range((t + 1) / 2, t - 1, t), AB, t), t);
    }

    {
        const auto halfDiag02 = diag02_range(1, (t - 1) / 2, t);
        std::vector<Quad> l4 = set_sum(halfDiag02, A, t); // P1
        std::vector<Quad> seven{Quad{{7, 0, 0, 0}}};
        auto p2 = set_sum(seven, set_sum(diag01_range(1, t - 1, t, t - 7), set_sum(halfDiag02, A, t), t), t);
        std::vector<Quad> sevenMinus{Quad{{7, static_cast<Point>(t - 7), 0, 0}}};
        auto p3 = set_sum(sevenMinus, set_sum(halfDiag02, A, t), t);
        l4.insert(l4.end(), p2.begin(), p2.end());
        l4.insert(l4.end(), p3.begin(), p3.end());
        std::sort(l4.begin(), l4.end());
        if (std::adjacent_find(l4.begin(), l4.end()) != l4.end())
            throw std::logic_error("build_Lprime_sets: L'4 pieces overlap");
        sets.L[3] = std::move(l4);
    }

    sets.L[4] = remainder_set(t, sets.L, 4);

    const Point h = static_cast<Point>((t + 1) / 2);
    sets.S[0] = set_sum(std::vector<Quad>{Quad{{1, 1, 0, 0}}}, A, t);
    sets.S[1] = set_sum(std::vector<Quad>{Quad{{0, h, h, 0}}}, A, t);
    sets.S[2] = set_sum(std::vector<Quad>{Quad{{1, 0, 1, 0}}}, A, t);
    return sets;
}

std::vector<ParallelClass> type5_even(int t) {
    if (t % 2 != 0)
        throw std::invalid_argument("type5_even: t must be even");
    std::vector<ParallelClass> out;
    out.reserve(static_cast<std::size_t>(t) * t * t);
    for (int x0 = 0; x0 < t; ++x0)
        for (int x1 = 0; x1 < t; ++x1)
            for (int x2 = 0; x2 < t; ++x2) {
                ParallelClass c;
                for (int a = 0; a < t; ++a)
                    c.blocks.push_back(Quad{{static_cast<Point>((x0 + a) % t),
                                             static_cast<Point>((x1 + a) % t),
                                             static_cast<Point>((x2 + a) % t), static_cast<Point>(a)}}
                                           .to_block(t));
                c.normalize();
                out.push_back(std::move(c));
            }
    return out;
}

std::vector<ParallelClass> type5_odd(const LSets& sets) {
    const int t = sets.t;
    std::set<std::uint32_t> reps;
    for (const Quad& q : sets.L[4]) {
        const int a = q.x[3];
        Quad rep{{static_cast<Point>(mod(q.x[0] - a, t)), static_cast<Point>(mod(q.x[1] - a, t)),
                  static_cast<Point>(mod(q.x[2] - a, t)), 0}};
        reps.insert(rep.code(t));
    }
    if (reps.size() * static_cast<std::size_t>(t) != sets.L[4].size())
        throw std::logic_error("type5_odd: L5 is not a union of A-cosets");

    std::vector<ParallelClass> out;
    for (std::uint32_t code : reps) {
        Quad rep = Quad::from_code(code, t);
        if (sets.prime && rep == Quad{{0, 0, 0, 0}})
            continue; // the class A appears inside Type 1
        ParallelClass c;
        for (int a = 0; a < t; ++a)
            c.blocks.push_back(quad_sum(rep, Quad{{static_cast<Point>(a), static_cast<Point>(a),
                                                   static_cast<Point>(a), static_cast<Point>(a)}},
                                        t)
                                   .to_block(t));
        c.normalize();
        out.push_back(std::move(c));
    }
    if (sets.prime)
        for (const auto& s : sets.S) {
            ParallelClass c;
            for (const Quad& q : s)
                c.blocks.push_back(q.to_block(t));
            c.normalize();
            out.push_back(std::move(c));
        }
    return out;
}

// --- assembly ----------------------------------------------------------------

std::array<std::int64_t, 5> expected_type_counts(int t) {
    const std::int64_t T = t;
    switch (t % 12) {
    case 0:
        return {binomial(T - 1, 3), 2 * T * (T - 1) * (T - 2), 3 * (T - 1) * binomial(T, 2),
                6 * (T - 1) * T * T, T * T * T};
    case 3:
        return {binomial(T, 3), (4 * T - 1) * binomial(T - 1, 2), 3 * T * binomial(T, 2), 6 * T * T * T,
                T * T * T - 3 * binomial(T, 2) - 6 * T * T};
    case 6:
        return {binomial(T + 1, 3), (2 * T - 1) * (T - 1) * (T - 2),
                3 * (T - 1) * binomial(T, 2) - (T - 1), 6 * (T - 1) * T * T, T * T * T};
    case 9:
        return {binomial(T + 2, 3), (4 * T - 3) * binomial(T - 1, 2), 3 * T * binomial(T, 2) - 3 * T,
                6 * T * T * T, T * T * T - 1 - 3 * binomial(T, 2) + 3 - 6 * T * T};
    }
    throw std::invalid_argument("expected_type_counts: unsupported residue");
}

namespace {

std::vector<Quad> set_difference_quads(const std::vector<Quad>& a, const std::vector<Quad>& b, int t) {
    std::set<std::uint32_t> bCodes;
    for (const Quad& q : b)
        bCodes.insert(q.code(t));
    std::vector<Quad> out;
    out.reserve(a.size());
    for (const Quad& q : a)
        if (!bCodes.count(q.code(t)))
            out.push_back(q);
    return out;
}

Design assemble(const QuadInput& input) {
    const int t = input.t;
    const int r12 = t % 12;

    std::vector<std::vector<ParallelClass>> parts;
    if (t % 2 == 0) {
        const OneFactorization of = one_factorization(t);
        parts.push_back(type1_classes(input));
        parts.push_back(type2_classes(input));
        parts.push_back(type3_even(t, of, r12 == 6));
        parts.push_back(type4_even(t, of));
        parts.push_back(type5_even(t));
    } else {
        const NearOneFactorization nof = near_one_factorization(t);
        const LSets sets = r12 == 3 ? build_L_sets(t) : build_Lprime_sets(t);
        std::array<GeneratorSet, 3> gsets;
        gsets[0] = GeneratorSet{{0, 1}, {2, 3}, sets.L[1], {}};
        gsets[1] = GeneratorSet{{0, 3}, {1, 2}, sets.L[2], {}};
        gsets[2] = GeneratorSet{{0, 2}, {1, 3}, sets.L[3], {}};
        if (sets.prime)
            for (int i = 0; i < 3; ++i) {
                auto& gs = gsets[static_cast<std::size_t>(i)];
                gs.generators = set_difference_quads(gs.generators, sets.S[static_cast<std::size_t>(i)], t);
                gs.preSeeded = sets.S[static_cast<std::size_t>(i)];
            }
        parts.push_back(type1_classes(input));
        parts.push_back(type2_classes(input));
        parts.push_back(type3_odd(t, nof, gsets));
        parts.push_back(type4_odd(t, nof, sets.H));
        parts.push_back(type5_odd(sets));
    }

    const auto expected = expected_type_counts(t);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (static_cast<std::int64_t>(parts[i].size()) != expected[i])
            throw std::logic_error("quadruple_bp: Type " + std::to_string(i + 1) + " emitted " +
                                   std::to_string(parts[i].size()) + " classes, expected " +
                                   std::to_string(expected[i]));

    Design d;
    d.kind = DesignKind::BP;
    d.n = 4 * t;
    d.k = 4;
    d.provenance = "quadrupling:t=" + std::to_string(t);
    d.classes.reserve(static_cast<std::size_t>(binomial(4 * t - 1, 3)));
    for (auto& p : parts)
        for (auto& c : p)
            d.classes.push_back(std::move(c));
    if (d.classes.size() != static_cast<std::size_t>(binomial(4 * t - 1, 3)))
        throw std::logic_error("quadruple_bp: class count does not match C(4t-1,3)");
    return d;
}

} // namespace

Design quadruple_bp(const QuadInput& input) {
    const int t = input.t;
    const int r12 = t % 12;
    switch (r12) {
    case 4:
    case 8: {
        if (input.bp4.n != t)
            throw std::invalid_argument("quadruple_bp: the doubling residues require a BP(t,4) input");
        DoublingInput first{input.bp4, seeds::resolvable_sqs(t), one_factorization(t)};
        Design half = double_design(first);
        DoublingInput second{std::move(half), seeds::resolvable_sqs(2 * t), one_factorization(2 * t)};
        Design full = double_design(second);
        full.provenance = "quadrupling:t=" + std::to_string(t) + ":via-doubling";
        return full;
    }
    case 0:
    case 6:
        return assemble(input);
    case 3:
        if (t < 15)
            throw std::invalid_argument("quadruple_bp: t = 3 (mod 12) requires t >= 15");
        return assemble(input);
    case 9:
        if (t < 21)
            throw std::invalid_argument("quadruple_bp: t = 9 (mod 12) requires t >= 21");
        return assemble(input);
    }
    throw std::invalid_argument("quadruple_bp: residue " + std::to_string(r12) +
                                " (mod 12) is not supported");
}

Design build_bp(int n) {
    if (n <= 0 || n % 4 != 0)
        throw std::invalid_argument("build_bp: n must be a positive multiple of 4");
    if (n <= 12)
        return seeds::bp4_seed(n);
    const int half = n / 2;
    if (half % 12 == 4 || half % 12 == 8) {
        DoublingInput in{build_bp(half), seeds::resolvable_sqs(half), one_factorization(half)};
        return double_design(in);
    }
    const int t = n / 4;
    const int r12 = t % 12;
    if (r12 != 0 && r12 != 3 && r12 != 6 && r12 != 9)
        throw std::invalid_argument("build_bp: t = " + std::to_string(t) + " has residue " +
                                    std::to_string(r12) + " (mod 12), which is not supported");
    if ((r12 == 3 && t < 15) || (r12 == 9 && t < 21))
        throw std::invalid_argument("build_bp: the odd residues require t >= 15 (resp. 21)");
    QuadInput in;
    in.t = t;
    in.bp4 = build_bp(t + delta1(t));
    in.bp3 = seeds::bp3_provider(t);
    return quadruple_bp(in);
}

} // namespace baranyai
