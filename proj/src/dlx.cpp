#include "baranyai/dlx.hpp"

#include <limits>
#include <stdexcept>

namespace baranyai {

DlxSolver::DlxSolver(int numItems) : numItems_(numItems), colSize_(static_cast<std::size_t>(numItems), 0) {
    // node 0 is the root; nodes 1..numItems are column headers
    nodes_.resize(static_cast<std::size_t>(numItems) + 1);
    for (int i = 0; i <= numItems; ++i) {
        nodes_[static_cast<std::size_t>(i)] = {i == 0 ? numItems : i - 1, i == numItems ? 0 : i + 1,
                                               i, i, i - 1, -1};
    }
}

int DlxSolver::add_row(const std::vector<int>& items) {
    if (items.empty())
        throw std::invalid_argument("dlx: empty row");
    int first = static_cast<int>(nodes_.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        int col = items[i];
        if (col < 0 || col >= numItems_)
            throw std::out_of_range("dlx: item index out of range");
        int header = col + 1;
        int idx = static_cast<int>(nodes_.size());
        Node n;
        n.col = header;
        n.rowId = nextRowId_;
        n.up = nodes_[static_cast<std::size_t>(header)].up;
        n.down = header;
        n.left = i == 0 ? idx : idx - 1;
        n.right = i == 0 ? idx : first;
        nodes_.push_back(n);
        nodes_[static_cast<std::size_t>(n.up)].down = idx;
        nodes_[static_cast<std::size_t>(header)].up = idx;
        if (i > 0) {
            nodes_[static_cast<std::size_t>(idx - 1)].right = idx;
            nodes_[static_cast<std::size_t>(first)].left = idx;
        }
        ++colSize_[static_cast<std::size_t>(col)];
    }
    return nextRowId_++;
}

void DlxSolver::cover(int col) {
    Node& h = nodes_[static_cast<std::size_t>(col)];
    nodes_[static_cast<std::size_t>(h.right)].left = h.left;
    nodes_[static_cast<std::size_t>(h.left)].right = h.right;
    for (int i = h.down; i != col; i = nodes_[static_cast<std::size_t>(i)].down)
        for (int j = nodes_[static_cast<std::size_t>(i)].right; j != i;
             j = nodes_[static_cast<std::size_t>(j)].right) {
            Node& nj = nodes_[static_cast<std::size_t>(j)];
            nodes_[static_cast<std::size_t>(nj.down)].up = nj.up;
            nodes_[static_cast<std::size_t>(nj.up)].down = nj.down;
            --colSize_[static_cast<std::size_t>(nj.col - 1)];
        }
}

void DlxSolver::uncover(int col) {
    Node& h = nodes_[static_cast<std::size_t>(col)];
    for (int i = h.up; i != col; i = nodes_[static_cast<std::size_t>(i)].up)
        for (int j = nodes_[static_cast<std::size_t>(i)].left; j != i;
             j = nodes_[static_cast<std::size_t>(j)].left) {
            Node& nj = nodes_[static_cast<std::size_t>(j)];
            nodes_[static_cast<std::size_t>(nj.down)].up = j;
            nodes_[static_cast<std::size_t>(nj.up)].down = j;
            ++colSize_[static_cast<std::size_t>(nj.col - 1)];
        }
    nodes_[static_cast<std::size_t>(h.right)].left = col;
    nodes_[static_cast<std::size_t>(h.left)].right = col;
}

bool DlxSolver::search(std::vector<int>& solutionRows) {
    if (nodes_[0].right == 0)
        return true;
    if (++visited_ > budget_) {
        budgetHit_ = true;
        return false;
    }
    if (deadline_ && (visited_ & 0xffff) == 0 && std::chrono::steady_clock::now() >= *deadline_) {
        budgetHit_ = true;
        return false;
    }

    int best = -1, bestSize = std::numeric_limits<int>::max();
    for (int h = nodes_[0].right; h != 0; h = nodes_[static_cast<std::size_t>(h)].right) {
        int size = colSize_[static_cast<std::size_t>(h - 1)];
        if (size < bestSize) {
            bestSize = size;
            best = h;
            if (size == 0)
                break;
        }
    }
    if (bestSize == 0)
        return false;

    cover(best);
    for (int r = nodes_[static_cast<std::size_t>(best)].down; r != best;
         r = nodes_[static_cast<std::size_t>(r)].down) {
        solutionRows.push_back(nodes_[static_cast<std::size_t>(r)].rowId);
        for (int j = nodes_[static_cast<std::size_t>(r)].right; j != r;
             j = nodes_[static_cast<std::size_t>(j)].right)
            cover(nodes_[static_cast<std::size_t>(j)].col);
        if (search(solutionRows))
            return true;
        for (int j = nodes_[static_cast<std::size_t>(r)].left; j != r;
             j = nodes_[static_cast<std::size_t>(j)].left)
            uncover(nodes_[static_cast<std::size_t>(j)].col);
        solutionRows.pop_back();
        if (budgetHit_)
            break;
    }
    uncover(best);
    return false;
}

DlxSolver::Status DlxSolver::solve(std::vector<int>& solutionRows, std::uint64_t nodeBudget,
                                   std::optional<std::chrono::steady_clock::time_point> deadline) {
    solutionRows.clear();
    budget_ = nodeBudget;
    deadline_ = deadline;
    budgetHit_ = false;
    visited_ = 0;
    if (search(solutionRows))
        return Status::Solved;
    return budgetHit_ ? Status::BudgetExceeded : Status::Exhausted;
}

} // namespace baranyai
