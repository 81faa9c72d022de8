#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "baranyai/io.hpp"
#include "baranyai/seeds.hpp"
#include "baranyai/verify.hpp"

using namespace baranyai;

TEST_CASE("bp_8_4 is the 35 complement pairs in canonical order") {
    Design d = seeds::bp_8_4();
    REQUIRE(d.classes.size() == 35);
    CHECK(d.classes[0].blocks[0] == Block{0, 1, 2, 3});
    CHECK(d.classes[0].blocks[1] == Block{4, 5, 6, 7});
    CHECK(verify_bp(d, 8, 4).ok);
}

TEST_CASE("small complement designs") {
    Design one = seeds::bp_small_complement(4, 4);
    REQUIRE(one.classes.size() == 1);
    CHECK(one.classes[0].blocks[0] == Block{0, 1, 2, 3});

    Design six = seeds::bp_small_complement(6, 3);
    CHECK(six.classes.size() == 10);
    CHECK(verify_bp(six, 6, 3).ok);

    CHECK(design_to_string(seeds::bp_small_complement(8, 4)) == design_to_string(seeds::bp_8_4()));
    CHECK_THROWS_AS(seeds::bp_small_complement(12, 4), std::invalid_argument);
}

namespace {

void check_steiner(const std::vector<Block>& blocks, int v) {
    std::set<std::int64_t> triples;
    for (const Block& b : blocks)
        for (int drop = 0; drop < 4; ++drop) {
            std::array<Point, 3> tri{};
            int j = 0;
            for (int i = 0; i < 4; ++i)
                if (i != drop)
                    tri[static_cast<std::size_t>(j++)] = b[i];
            REQUIRE(triples.insert(rank_block(Block(std::span<const Point>(tri.data(), 3)), v)).second);
        }
    REQUIRE(static_cast<std::int64_t>(triples.size()) == binomial(v, 3));
}

} // namespace

TEST_CASE("SQS(8) block set: 14 xor-zero quadruples, Steiner property") {
    auto blocks = seeds::sqs8_blocks();
    REQUIRE(blocks.size() == 14);
    check_steiner(blocks, 8);
}

TEST_CASE("SQS(16) block set: 140 doubled blocks, Steiner property") {
    auto blocks = seeds::sqs16_blocks();
    REQUIRE(blocks.size() == 140);
    check_steiner(blocks, 16);
}

TEST_CASE("exact_cover_resolve resolves SQS(8) deterministically") {
    auto blocks = seeds::sqs8_blocks();
    Design r1 = seeds::exact_cover_resolve(blocks, 8, 4);
    Design r2 = seeds::exact_cover_resolve(blocks, 8, 4);
    r1.kind = r2.kind = DesignKind::RSQS;
    REQUIRE(r1.classes.size() == 7);
    for (const auto& c : r1.classes)
        CHECK(c.blocks.size() == 2);
    CHECK(verify_rsqs(r1, 8).ok);
    CHECK(design_to_string(r1) == design_to_string(r2));
}

TEST_CASE("resolvable SQS(8) and SQS(16) load and verify") {
    Design s8 = seeds::resolvable_sqs(8);
    CHECK(s8.classes.size() == 7);
    CHECK(verify_rsqs(s8, 8).ok);

    Design s16 = seeds::resolvable_sqs(16);
    CHECK(s16.classes.size() == 35);
    CHECK(verify_rsqs(s16, 16).ok);
}

TEST_CASE("the affine chain supplies RSQS(32) without search") {
    CHECK(seeds::rsqs_class_count(32) == 155);
    Design s32 = seeds::resolvable_sqs(32);
    REQUIRE(s32.classes.size() == 155);
    CHECK(verify_rsqs(s32, 32).ok);
    for (std::int64_t i : {0, 1, 77, 154})
        CHECK(seeds::rsqs_class(32, i) == s32.classes[static_cast<std::size_t>(i)]);
    CHECK_THROWS_AS(seeds::rsqs_class(32, 155), std::out_of_range);
    CHECK_THROWS_AS(seeds::resolvable_sqs(20), std::invalid_argument);

    Design s64 = seeds::resolvable_sqs(64);
    REQUIRE(s64.classes.size() == 651);
    CHECK(verify_rsqs(s64, 64).ok);
}

TEST_CASE("searched bootstrap designs verify on load") {
    Design bp12 = seeds::bp4_seed(12);
    CHECK(bp12.classes.size() == 165);
    CHECK(verify_bp(bp12, 12, 4).ok);

    Design bp12_3 = seeds::bp3_provider(12);
    CHECK(bp12_3.classes.size() == 55);
    CHECK(verify_bp(bp12_3, 12, 3).ok);

    Design bp15_3 = seeds::bp3_provider(15);
    CHECK(bp15_3.classes.size() == 91);
    CHECK(verify_bp(bp15_3, 15, 3).ok);

    CHECK(seeds::bp3_provider(6).classes.size() == 10);
    CHECK_THROWS_AS(seeds::bp3_provider(7), std::invalid_argument);
}

TEST_CASE("cache round-trip is byte-identical and digest-checked") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "baranyai_cache_test";
    fs::remove_all(dir);
    seeds::SeedCache cache(dir.string());

    Design d = seeds::bp_8_4();
    cache.store(d);
    REQUIRE(cache.has(DesignKind::BP, 8, 4));
    Design back = cache.load(DesignKind::BP, 8, 4);
    CHECK(design_to_string(back) == design_to_string(d));

    // round-trip again: identical bytes on disk
    std::string before = [&] {
        std::ifstream in(cache.path_for(DesignKind::BP, 8, 4), std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    }();
    cache.store(back);
    std::string after = [&] {
        std::ifstream in(cache.path_for(DesignKind::BP, 8, 4), std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    }();
    CHECK(before == after);

    // tampering is caught by the sidecar digest
    {
        std::ofstream out(cache.path_for(DesignKind::BP, 8, 4), std::ios::binary | std::ios::app);
        out << "0 1 2 3;4 5 6 7\n";
    }
    CHECK_THROWS(cache.load(DesignKind::BP, 8, 4));
    fs::remove_all(dir);
}

TEST_CASE("all k-subsets enumerate in colex order") {
    auto blocks = seeds::all_blocks(6, 3);
    REQUIRE(blocks.size() == 20);
    CHECK(blocks.front() == Block{0, 1, 2});
    CHECK(blocks.back() == Block{3, 4, 5});
    for (std::size_t i = 0; i < blocks.size(); ++i)
        CHECK(rank_block(blocks[i], 6) == static_cast<std::int64_t>(i));
}
