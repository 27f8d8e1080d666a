#include "leafword/leaf_function.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace leafword;

TEST_CASE("leaf values order -inf below every number") {
    CHECK(kNegInf < LeafValue::finite(0));
    CHECK(LeafValue::finite(2) < LeafValue::finite(3));
    CHECK(kNegInf.str() == "-inf");
    CHECK(LeafValue::finite(7).str() == "7");
    CHECK_FALSE(kNegInf.is_finite());
    CHECK_THROWS(kNegInf.value());
}

TEST_CASE("leaf function invariants") {
    CHECK_FALSE(LeafFunction::from_ints({0, 0, 2, 2, 3}).invariant_violation());
    CHECK_FALSE(LeafFunction::from_ints({0, 0, -1}).invariant_violation());
    CHECK_FALSE(LeafFunction::from_ints({0}).invariant_violation());
    CHECK(LeafFunction::from_ints({1, 0, 2}).invariant_violation());
    CHECK(LeafFunction::from_ints({0, 1, 2}).invariant_violation());
    CHECK(LeafFunction::from_ints({0, 0, 3}).invariant_violation());
    CHECK(LeafFunction::from_ints({0, 0, 2, -1, 2}).invariant_violation());
    CHECK_THROWS(LeafFunction(std::vector<LeafValue>{}));

    CHECK(LeafFunction::from_ints({0, 0, 2, 2, 3}).is_non_decreasing());
    CHECK_FALSE(LeafFunction::from_ints({0, 0, 2, 3, 2}).is_non_decreasing());
    CHECK_FALSE(LeafFunction::from_ints({0, 0, 2, -1}).is_non_decreasing());
}

TEST_CASE("leaf function json and csv round trip") {
    const auto lf = LeafFunction::from_ints({0, 0, 2, 2, 3, 4, 5, 2, 2, 2, -1, -1});
    const auto j = to_json(lf);
    CHECK(j == R"({"n":11,"values":[0,0,2,2,3,4,5,2,2,2,"-inf","-inf"]})");
    CHECK(leaf_function_from_json(j) == lf);
    CHECK(to_csv(lf) == "0,0,2,2,3,4,5,2,2,2,-inf,-inf");
    CHECK(parse_leaf_values(to_csv(lf)) == lf);
    CHECK(parse_leaf_values(" 0, 0 ,2 ") == LeafFunction::from_ints({0, 0, 2}));

    CHECK_THROWS_AS(leaf_function_from_json(R"({"n":3,"values":[0,0,2]})"), std::invalid_argument);
    CHECK_THROWS_AS(leaf_function_from_json(R"({"n":1,"values":[0,"inf"]})"), std::invalid_argument);
    CHECK_THROWS_AS(leaf_function_from_json("not json"), std::invalid_argument);
    CHECK_THROWS(parse_leaf_values("0,x,2"));
    CHECK_THROWS(parse_leaf_values("0,,2"));
    CHECK_THROWS(parse_leaf_values(""));
}
