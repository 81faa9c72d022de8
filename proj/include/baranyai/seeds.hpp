#pragma once

#include <chrono>
#include <stdexcept>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "baranyai/core.hpp"

namespace baranyai::seeds {

struct SearchBudget {
    std::chrono::seconds wallClock{600};
    std::uint64_t nodes = UINT64_MAX;
};

struct SearchTimeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SearchBudget default_budget(); // BARANYAI_SEARCH_BUDGET_SEC overrides the wall clock

std::vector<Block> all_blocks(int n, int k);

// Blocks of each class sorted, classes ordered by the colex rank of the
// block containing point 0.
void canonicalize_design(Design& d);

// BP(n,k) for n == k (one class) or n == 2k (complement pairs).
Design bp_small_complement(int n, int k);
Design bp_8_4();

// The unique SQS(8): 4-subsets of [0,8) whose 3-bit labels xor to zero.
std::vector<Block> sqs8_blocks();
// SQS(16) by doubling SQS(8), cross blocks paired through the xor
// one-factorization of K_8 (pairs at equal bit difference).
std::vector<Block> sqs16_blocks();

// Partitions the given blocks into parallel classes by dancing links.
// Each class's block through point 0 is pinned in canonical order, which
// breaks the class symmetry completely. Throws on timeout or infeasibility.
Design exact_cover_resolve(const std::vector<Block>& blocks, int n, int k,
                           const SearchBudget& budget = default_budget());

// BP(n,k) search restricted to partitions invariant under x -> x+1 (mod g)
// on [0,g), g = n - fixedCount. Much smaller than the raw instance; returns
// nullopt when no such partition exists or the budget runs out.
std::optional<Design> cyclic_resolve(int n, int k, int fixedCount,
                                     const SearchBudget& budget = default_budget());

class SeedCache {
public:
    explicit SeedCache(std::string directory);

    const std::string& directory() const { return dir_; }
    std::string path_for(DesignKind kind, int n, int k) const;
    bool has(DesignKind kind, int n, int k) const;
    Design load(DesignKind kind, int n, int k) const; // verifies before returning
    void store(const Design& d);

    template <typename Builder>
    Design get_or_build(DesignKind kind, int n, int k, Builder&& build) {
        if (has(kind, n, k))
            return load(kind, n, k);
        Design d = build();
        d.kind = kind;
        store(d);
        return load(kind, n, k);
    }

private:
    std::string dir_;
};

SeedCache& default_cache(); // BARANYAI_CACHE overrides the directory

// Resolvable SQS(v). v in {8,16}: block set above, resolved by exact cover
// and cached. Larger powers of two (the doubling chain): xor block set with
// its affine parallelism, no search.
Design resolvable_sqs(int v);
std::int64_t rsqs_class_count(int v);
ParallelClass rsqs_class(int v, std::int64_t index); // 0-based, O(v) for the 2^e chain

// BP(m,3) for 3 | m: complement pairs at m=6, cached searches otherwise.
Design bp3_provider(int m);

// The bootstrap BP(n,4) designs: n = 4, 8 directly, n = 12 by cached search.
Design bp4_seed(int n);

} // namespace baranyai::seeds
