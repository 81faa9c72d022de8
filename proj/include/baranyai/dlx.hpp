#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace baranyai {

// Knuth's dancing-links exact cover. Items are covered exactly once; the
// column with the fewest live rows is branched first, lowest index breaking
// ties, rows in insertion order, so a run is fully deterministic. A solved
// instance keeps its links covered: construct a fresh solver per solve.
class DlxSolver {
public:
    explicit DlxSolver(int numItems);

    int add_row(const std::vector<int>& items); // returns row id

    enum class Status { Solved, Exhausted, BudgetExceeded };

    Status solve(std::vector<int>& solutionRows, std::uint64_t nodeBudget = UINT64_MAX,
                 std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);
    std::uint64_t nodes_visited() const { return visited_; }

private:
    struct Node {
        int left, right, up, down;
        int col;    // column header index for data nodes
        int rowId;  // -1 for headers
    };

    void cover(int col);
    void uncover(int col);
    bool search(std::vector<int>& solutionRows);

    int numItems_;
    std::vector<Node> nodes_;
    std::vector<int> colSize_;
    std::uint64_t visited_ = 0;
    std::uint64_t budget_ = UINT64_MAX;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    bool budgetHit_ = false;
    int nextRowId_ = 0;
};

} // namespace baranyai
