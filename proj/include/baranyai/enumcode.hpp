#pragma once

#include <cstdint>

#include "baranyai/core.hpp"

namespace baranyai {

// Direct generation for the doubling chain n = 4, 8, 16, 32, ... without
// listing: the 1-based column index is split against the Type S/T/F interval
// boundaries, Type S recursing on n/2. Output equals line i of the listed
// design exactly.
bool in_doubling_chain(int n);
ParallelClass column(int n, std::int64_t i);
Block entry(int n, std::int64_t i, std::int64_t j); // 1-based block index

} // namespace baranyai
