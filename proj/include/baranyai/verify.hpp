#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "baranyai/core.hpp"

namespace baranyai {

class Bitset {
public:
    explicit Bitset(std::int64_t bits = 0) : bits_(bits), words_(static_cast<std::size_t>((bits + 63) / 64)) {}

    std::int64_t size() const { return bits_; }
    bool test(std::int64_t i) const { return (words_[word(i)] >> (i & 63)) & 1u; }
    // Returns the previous value.
    bool test_and_set(std::int64_t i) {
        std::uint64_t mask = 1ull << (i & 63);
        bool old = words_[word(i)] & mask;
        words_[word(i)] |= mask;
        return old;
    }
    std::int64_t count() const;
    // ORs `other` into this bitset, appending overlapping positions to `collisions`.
    void merge(const Bitset& other, std::vector<std::int64_t>& collisions);
    void for_each_clear(const std::function<void(std::int64_t)>& fn) const;

private:
    static std::size_t word(std::int64_t i) { return static_cast<std::size_t>(i >> 6); }
    std::int64_t bits_;
    std::vector<std::uint64_t> words_;
};

struct ClassViolation {
    std::size_t class_index = 0;
    std::string message;
};

struct DuplicateEntry {
    Block block;
    int multiplicity = 0;
};

struct CoverageReport {
    bool ok = false;
    std::int64_t expected_classes = 0;
    std::int64_t actual_classes = 0;
    std::int64_t covered = 0;
    std::vector<Block> missing;
    std::vector<DuplicateEntry> duplicated;
    std::vector<ClassViolation> class_errors;

    void print(std::ostream& os) const; // KEY=VALUE lines
};

// Disjointness, full coverage of [0,n) and block count n/k.
std::optional<ClassViolation> verify_class(const ParallelClass& c, int n, int k);

// Exactly-once coverage of all C(n,k) blocks plus the class-count identity.
CoverageReport verify_bp(const Design& d, int n, int k);

// Steiner quadruple system with a resolution: every 3-subset in exactly one
// block, (n-1)(n-2)/6 classes, each a partition of the point set.
CoverageReport verify_rsqs(const Design& d, int n);

// Per-class group tallies for a design on Z_t x Z_4, classified by content.
struct GroupCensus {
    std::array<std::int64_t, 5> classes_by_type{}; // Types 1..5
    std::vector<std::size_t> unclassified;         // class indices with no known signature

    bool matches(const std::array<std::int64_t, 5>& expected) const {
        return unclassified.empty() && classes_by_type == expected;
    }
};

GroupCensus type_census(const Design& d, int t);

// Per-class |{x}| tallies for a doubling design on Z_t x Z_2 (types S/T/F).
struct StfCensus {
    std::int64_t type_s = 0, type_t = 0, type_f = 0;
    std::vector<std::size_t> unclassified;
};

StfCensus stf_census(const Design& d, int t);

} // namespace baranyai
