#include "baranyai/latin.hpp"

#include <stdexcept>
#include <string>

namespace baranyai {

bool LatinSquare::valid() const {
    if (cells.size() != static_cast<std::size_t>(n) * n)
        return false;
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n; ++c) {
            Point v = at(r, c);
            if (v >= n || seen[v])
                return false;
            seen[v] = 1;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < n; ++r) {
            Point v = at(r, c);
            if (v >= n || seen[v])
                return false;
            seen[v] = 1;
        }
    }
    return true;
}

LatinSquare cyclic_latin(int n) {
    LatinSquare m;
    m.n = n;
    m.cells.resize(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m.at(r, c) = static_cast<Point>((r + c) % n);
    return m;
}

namespace {

void validate_partial(const PartialRows& p) {
    const int n = p.n;
    if (n <= 0)
        throw std::invalid_argument("complete_latin: order must be positive");
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
        if (p.rows[r].size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("complete_latin: row " + std::to_string(r) + " has wrong length");
        std::fill(seen.begin(), seen.end(), 0);
        for (Point v : p.rows[r]) {
            if (v >= n || seen[v])
                throw std::invalid_argument("complete_latin: row " + std::to_string(r) +
                                            " is not a permutation");
            seen[v] = 1;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t r = 0; r < p.rows.size(); ++r) {
            Point v = p.rows[r][static_cast<std::size_t>(c)];
            if (seen[v])
                throw std::invalid_argument("complete_latin: column " + std::to_string(c) +
                                            " repeats symbol " + std::to_string(v));
            seen[v] = 1;
        }
    }
}

// One row of the completion: a perfect matching of columns to symbols still
// unused in each column, via augmenting paths (Kuhn). The candidate order per
// column starts cyclically after `start[c]`; a matching always exists because
// the unused-symbol bipartite graph is regular.
struct RowMatcher {
    int n;
    const std::vector<char>& colUsed; // n*n, colUsed[c*n+s]
    const std::vector<Point>& start;
    std::vector<int> symOwner;  // symbol -> column, -1 if free
    std::vector<char> visited;

    RowMatcher(int n_, const std::vector<char>& used, const std::vector<Point>& start_)
        : n(n_), colUsed(used), start(start_), symOwner(static_cast<std::size_t>(n_), -1),
          visited(static_cast<std::size_t>(n_)) {}

    bool augment(int c) {
        for (int d = 0; d < n; ++d) {
            int s = (start[static_cast<std::size_t>(c)] + d) % n;
            if (colUsed[static_cast<std::size_t>(c) * n + s] || visited[static_cast<std::size_t>(s)])
                continue;
            visited[static_cast<std::size_t>(s)] = 1;
            if (symOwner[static_cast<std::size_t>(s)] < 0 || augment(symOwner[static_cast<std::size_t>(s)])) {
                symOwner[static_cast<std::size_t>(s)] = c;
                return true;
            }
        }
        return false;
    }

    std::vector<Point> run() {
        for (int c = 0; c < n; ++c) {
            std::fill(visited.begin(), visited.end(), 0);
            if (!augment(c))
                throw std::logic_error("complete_latin: row matching failed");
        }
        std::vector<Point> row(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s)
            row[static_cast<std::size_t>(symOwner[static_cast<std::size_t>(s)])] = static_cast<Point>(s);
        return row;
    }
};

} // namespace

LatinSquare complete_latin(const PartialRows& p) {
    validate_partial(p);
    const int n = p.n;
    LatinSquare m;
    m.n = n;
    m.cells.reserve(static_cast<std::size_t>(n) * n);

    std::vector<char> colUsed(static_cast<std::size_t>(n) * n, 0);
    for (const auto& row : p.rows)
        for (int c = 0; c < n; ++c)
            colUsed[static_cast<std::size_t>(c) * n + row[static_cast<std::size_t>(c)]] = 1;
    for (const auto& row : p.rows)
        m.cells.insert(m.cells.end(), row.begin(), row.end());

    for (int r = p.filled(); r < n; ++r) {
        std::vector<Point> start(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
            start[static_cast<std::size_t>(c)] =
                r == 0 ? static_cast<Point>(c) : static_cast<Point>((m.at(r - 1, c) + 1) % n);
        auto row = RowMatcher(n, colUsed, start).run();
        for (int c = 0; c < n; ++c)
            colUsed[static_cast<std::size_t>(c) * n + row[static_cast<std::size_t>(c)]] = 1;
        m.cells.insert(m.cells.end(), row.begin(), row.end());
    }
    return m;
}

int type2_predetermined_rows(int residue) {
    switch (residue) {
    case 0: return 0;
    case 3: return 1;
    case 2: return 2;
    case 1: return 3;
    }
    throw std::invalid_argument("type2_predetermined_rows: residue must be in [0,4)");
}

LatinSquare type2_matrix(const ParallelClass& triples, int t, int residue) {
    if (t % 3 != 0)
        throw std::invalid_argument("type2_matrix: t must be divisible by 3");
    if (triples.blocks.size() != static_cast<std::size_t>(t) / 3)
        throw std::invalid_argument("type2_matrix: class must have t/3 triples");
    if (residue != t % 4)
        throw std::invalid_argument("type2_matrix: residue does not match t");

    const int pre = type2_predetermined_rows(residue);
    if (pre == 0)
        return cyclic_latin(t);

    PartialRows p;
    p.n = t;
    p.rows.assign(static_cast<std::size_t>(pre), std::vector<Point>(static_cast<std::size_t>(t)));
    for (int m = 0; m < t / 3; ++m) {
        const Block& b = triples.blocks[static_cast<std::size_t>(m)];
        if (b.size() != 3)
            throw std::invalid_argument("type2_matrix: blocks must be triples");
        for (int row = 0; row < pre; ++row)
            for (int i = 0; i < 3; ++i)
                p.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(3 * m + i)] = b[(i + row) % 3];
    }
    return complete_latin(p);
}

} // namespace baranyai
