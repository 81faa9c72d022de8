#include <doctest.h>

#include <sstream>

#include "baranyai/io.hpp"
#include "baranyai/seeds.hpp"

using namespace baranyai;

TEST_CASE("serialize then parse is the identity") {
    Design d = seeds::bp_8_4();
    d.provenance = "complement-pairs";
    std::string text = design_to_string(d);
    std::istringstream in(text);
    Design back = read_design(in);
    CHECK(back.n == d.n);
    CHECK(back.k == d.k);
    CHECK(back.provenance == d.provenance);
    REQUIRE(back.classes.size() == d.classes.size());
    CHECK(back.classes == d.classes);
    CHECK(design_to_string(back) == text);
}

TEST_CASE("header and body must agree") {
    std::istringstream bad1("BARANYAI v1 n=8 k=4 classes=2 provenance=x\n0 1 2 3;4 5 6 7\n");
    CHECK_THROWS_WITH_AS(read_design(bad1), doctest::Contains("announces"), std::runtime_error);

    std::istringstream bad2("NOPE v1 n=8 k=4 classes=0 provenance=x\n");
    CHECK_THROWS_AS(read_design(bad2), std::runtime_error);

    std::istringstream bad3("BARANYAI v1 n=8 k=4 classes=1 provenance=x\n0 1 2;4 5 6 7\n");
    CHECK_THROWS_AS(read_design(bad3), std::runtime_error);

    std::istringstream bad4("BARANYAI v1 n=8 k=4 classes=1 provenance=x\n0 1 2 9;4 5 6 7\n");
    CHECK_THROWS_AS(read_design(bad4), std::runtime_error);
}

TEST_CASE("first line of BP(8,4) matches the canonical ordering") {
    std::string text = design_to_string(seeds::bp_8_4());
    auto firstBody = text.find('\n') + 1;
    CHECK(text.substr(firstBody, text.find('\n', firstBody) - firstBody) == "0 1 2 3;4 5 6 7");
}

TEST_CASE("digest is stable") {
    CHECK(content_digest("") == "fnv1a64:cbf29ce484222325");
    CHECK(content_digest("a") != content_digest("b"));
}
