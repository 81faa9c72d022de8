#pragma once

#include <array>
#include <optional>
#include <vector>

#include "baranyai/core.hpp"
#include "baranyai/factor.hpp"

namespace baranyai {

// BP(4t,4) on Z_t x Z_4 from BP(t+d1,4) and BP(t+d2,3), where t+d1 is
// divisible by 4 and t+d2 by 3. Supported: t = 0,3,4,6,8,9 (mod 12); the
// odd residues need t >= 15 (mod 3) and t >= 21 (mod 9).
struct QuadInput {
    int t = 0;
    Design bp4;
    Design bp3; // unused for t = 4, 8 (mod 12), which delegate to doubling
};

std::vector<ParallelClass> type1_classes(const QuadInput& input);
std::vector<ParallelClass> type2_classes(const QuadInput& input);

// Even t: classes over factor pairs (i, s, shift r) for the three layer
// patterns. With skipTypeOneCovered (t = 2 mod 4), the t-1 classes whose
// content Type 1 already covers are left out.
std::vector<ParallelClass> type3_even(int t, const OneFactorization& of, bool skipTypeOneCovered);

// A generator set for Type 3 with odd t: quadruples whose oriented pairs at
// pairA/pairB layers each appear exactly (t-1)/2 times. preSeeded elements
// (Case 6's S sets) consume appearance index 0 without being emitted.
struct GeneratorSet {
    std::array<int, 2> pairA{};
    std::array<int, 2> pairB{};
    std::vector<Quad> generators;
    std::vector<Quad> preSeeded;
};

std::vector<ParallelClass> type3_odd(int t, const NearOneFactorization& nof,
                                     const std::array<GeneratorSet, 3>& gsets);

std::vector<ParallelClass> type4_even(int t, const OneFactorization& of);
std::vector<ParallelClass> type4_odd(int t, const NearOneFactorization& nof,
                                     const std::array<std::vector<Quad>, 6>& hsets);

// The partition of all t^4 configuration-(1,1,1,1) quadruples steering the
// odd-t bookkeeping; prime=true is the t = 9 (mod 12) variant with its
// S subsets.
struct LSets {
    bool prime = false;
    int t = 0;
    std::array<std::vector<Quad>, 5> L;
    std::array<std::vector<Quad>, 6> H; // partition of L[0]
    std::array<std::vector<Quad>, 3> S; // S2, S3, S4 (prime only)
};

LSets build_L_sets(int t);
LSets build_Lprime_sets(int t);

std::vector<ParallelClass> type5_even(int t);
// A-cosets of L5; for the prime variant the coset A itself is withheld
// (Type 1 provides it) and S2, S3, S4 are appended as standalone classes.
std::vector<ParallelClass> type5_odd(const LSets& sets);

std::array<std::int64_t, 5> expected_type_counts(int t);

Design quadruple_bp(const QuadInput& input);

// Builds BP(n,4) for any supported n: seeds at n <= 12, doubling when
// n/2 = 4 or 8 (mod 12), the quadrupling cases otherwise.
Design build_bp(int n);

} // namespace baranyai
