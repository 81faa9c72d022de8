#pragma once

#include "baranyai/core.hpp"
#include "baranyai/factor.hpp"

namespace baranyai {

// BP(2t,4) on Z_t x Z_2 from BP(t,4), a resolvable SQS(t) and a
// one-factorization of K_t, for t = 4 or 8 (mod 12).
struct DoublingInput {
    Design bp;            // BP(t,4) on Z_t
    Design rsqs;          // resolvable SQS(t)
    OneFactorization of;  // K_t
};

// The eight classes induced by one BP(t,4) class; inner index i encodes the
// layer bits (j2 j3 j4) of the second, third and fourth block element.
ParallelClass double_type_s(const ParallelClass& r, int innerIndex, int t);

// The 24 classes induced by one SQS class; inner index is 4i+2j+k over the
// six block templates i and layer choices j,k.
ParallelClass double_type_t(const ParallelClass& r, int innerIndex, int t);

ParallelClass double_type_f(std::span<const VertexPair> factor, int t);

// Full listing: all Type S classes (input order, inner index ascending),
// then Type T, then Type F.
Design double_design(const DoublingInput& input);

} // namespace baranyai
