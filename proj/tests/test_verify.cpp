#include <doctest.h>

#include <map>
#include <sstream>

#include "baranyai/doubling.hpp"
#include "baranyai/seeds.hpp"
#include "baranyai/verify.hpp"

using namespace baranyai;

namespace {

ParallelClass cls(std::vector<Block> blocks) {
    ParallelClass c;
    c.blocks = std::move(blocks);
    c.normalize();
    return c;
}

} // namespace

TEST_CASE("verify_class accepts a partition and pinpoints defects") {
    CHECK(!verify_class(cls({Block{0, 1, 2, 3}, Block{4, 5, 6, 7}}), 8, 4));

    auto dup = verify_class(cls({Block{0, 1, 2, 3}, Block{3, 4, 5, 6}}), 8, 4);
    REQUIRE(dup.has_value());
    CHECK(dup->message.find("3") != std::string::npos);

    auto count = verify_class(cls({Block{0, 1, 2, 3}}), 8, 4);
    REQUIRE(count.has_value());
    CHECK(count->message.find("1 blocks") != std::string::npos);
}

TEST_CASE("verify_bp certifies BP(8,4) and reports deletions") {
    Design d = seeds::bp_8_4();
    auto rep = verify_bp(d, 8, 4);
    CHECK(rep.ok);
    CHECK(rep.actual_classes == 35);
    CHECK(rep.covered == 70);

    Design broken = d;
    broken.classes.erase(broken.classes.begin() + 10);
    auto bad = verify_bp(broken, 8, 4);
    CHECK(!bad.ok);
    CHECK(bad.missing.size() == 2); // a deleted class covers n/k blocks
    CHECK(bad.actual_classes == 34);

    Design doubled = d;
    doubled.classes.push_back(doubled.classes.front());
    auto dup = verify_bp(doubled, 8, 4);
    CHECK(!dup.ok);
    CHECK(dup.duplicated.size() == 2);
    CHECK(dup.duplicated.front().multiplicity == 2);
}

TEST_CASE("bitset coverage agrees with brute-force dictionary counting") {
    for (Design d : {seeds::bp_8_4(), seeds::bp_small_complement(6, 3)}) {
        std::map<Block, int> dict;
        for (const auto& c : d.classes)
            for (const Block& b : c.blocks)
                ++dict[b];
        bool allOnce = static_cast<std::int64_t>(dict.size()) == binomial(d.n, d.k) &&
                       std::all_of(dict.begin(), dict.end(), [](auto& kv) { return kv.second == 1; });
        auto rep = verify_bp(d, d.n, d.k);
        CHECK(rep.ok == allOnce);
        CHECK(rep.ok);
    }
}

TEST_CASE("report serializes as KEY=VALUE lines") {
    auto rep = verify_bp(seeds::bp_8_4(), 8, 4);
    std::ostringstream os;
    rep.print(os);
    CHECK(os.str().find("OK=1\n") != std::string::npos);
    CHECK(os.str().find("CLASSES=35\n") != std::string::npos);
    CHECK(os.str().find("COVERED=70\n") != std::string::npos);
}

TEST_CASE("stf census classifies doubled classes by distinct first coordinates") {
    ParallelClass r;
    r.blocks = {Block{0, 1, 2, 3}, Block{4, 5, 6, 7}};
    Design d;
    d.n = 16;
    d.k = 4;
    d.classes.push_back(double_type_s(r, 3, 8));
    d.classes.push_back(double_type_t(r, 11, 8));
    d.classes.push_back(double_type_f(one_factor(8, 2), 8));
    auto census = stf_census(d, 8);
    CHECK(census.unclassified.empty());
    CHECK(census.type_s == 1);
    CHECK(census.type_t == 1);
    CHECK(census.type_f == 1);
}
