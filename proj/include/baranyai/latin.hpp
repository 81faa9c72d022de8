#pragma once

#include <cstdint>
#include <vector>

#include "baranyai/core.hpp"

namespace baranyai {

struct LatinSquare {
    int n = 0;
    std::vector<Point> cells; // row-major

    Point at(int row, int col) const { return cells[static_cast<std::size_t>(row) * n + col]; }
    Point& at(int row, int col) { return cells[static_cast<std::size_t>(row) * n + col]; }
    bool valid() const;
};

struct PartialRows {
    int n = 0;
    std::vector<std::vector<Point>> rows;

    int filled() const { return static_cast<int>(rows.size()); }
};

// Extends the given rows to a full Latin square. Row r is matched column by
// column; candidate symbols for a column are tried in cyclic ascending order
// starting just after the entry above (row 0 of an empty input starts at the
// column index, so an empty input completes to the cyclic square).
LatinSquare complete_latin(const PartialRows& p);

LatinSquare cyclic_latin(int n);

// The Type 2 matrix M: rows predetermined from the triples of R according to
// t mod 4 (none, row 0, rows 0-1, or rows 0-2), then completed.
LatinSquare type2_matrix(const ParallelClass& triples, int t, int residue);

// Rows of type2_matrix that were predetermined (0, 1, 2 or 3 of them).
int type2_predetermined_rows(int residue);

} // namespace baranyai
