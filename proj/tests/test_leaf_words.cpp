#include "leafword/caterpillar.hpp"
#include "leafword/leaf_words.hpp"
#include "leafword/subtree_oracle.hpp"
#include "leafword/words.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace leafword;

namespace {

BinaryWord W(const char* s) {
    return BinaryWord::parse(s);
}

LeafFunction graph_leaf_function(const CaterpillarSequence& s) {
    return leaf_function_bruteforce(caterpillar_graph(s), {kMaxOracleVertices, Execution::sequential});
}

}  // namespace

TEST_CASE("delta leaf word") {
    CHECK(format_leaf_word(delta_leaf_word(LeafFunction::from_ints({0, 0, 2, 2, 3, 4, 4, 5, 5, 6}))) == "110101");
    const auto wheel10 = delta_leaf_word(oracle::wheel_formula(10));
    CHECK(format_leaf_word(wheel10) == "1,1,1,-3,0,0,w,w");
    CHECK(delta_leaf_word(LeafFunction::from_ints({0, 0, 2, 2})).empty());
    CHECK_THROWS_AS(delta_leaf_word(LeafFunction::from_ints({0, 0, 2})), std::invalid_argument);
    CHECK_THROWS_AS(delta_leaf_word(LeafFunction::from_ints({0, 1, 2, 2})), std::invalid_argument);
}

TEST_CASE("leaf function from a binary leaf word") {
    CHECK(leaf_function_from_word(W("110101")) == LeafFunction::from_ints({0, 0, 2, 2, 3, 4, 4, 5, 5, 6}));
    CHECK(leaf_function_from_word(W("")) == LeafFunction::from_ints({0, 0, 2, 2}));
    const auto lf = leaf_function_from_word(W("110101"));
    CHECK(lf[7].value() - lf[4].value() == 2);
    for (std::size_t n = 0; n <= 8; ++n)
        for (const auto& w : all_words(n)) REQUIRE(as_binary(delta_leaf_word(leaf_function_from_word(w))) == w);
}

TEST_CASE("leaf word classes") {
    CHECK(classify_leaf_word(parse_leaf_word("110101")) == LeafWordClass::tree_compatible);
    CHECK(classify_leaf_word(parse_leaf_word("1,1,1,-3,0,0,w,w")) == LeafWordClass::non_tree);
    CHECK(classify_leaf_word(parse_leaf_word("1,2,0")) == LeafWordClass::invalid);
    CHECK(classify_leaf_word(parse_leaf_word("1,w,0")) == LeafWordClass::invalid);
    CHECK(classify_leaf_word({}) == LeafWordClass::tree_compatible);
    CHECK(to_string(LeafWordClass::non_tree) == "non-tree");

    // The triangle's leaf word is empty, like that of the 3-vertex chain.
    const std::vector<std::pair<Vertex, Vertex>> tri{{0, 1}, {1, 2}, {0, 2}};
    CHECK(delta_leaf_word(leaf_function_bruteforce(Graph(3, tri))).empty());

    // From 4 vertices on, trees give binary words and no other connected graph does.
    for (std::size_t n = 4; n <= 6; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const auto g = oracle::graph_from_mask(n, mask);
            if (!is_connected(g)) continue;
            const auto cls = classify_leaf_word(delta_leaf_word(leaf_function_bruteforce(g)));
            REQUIRE(cls != LeafWordClass::invalid);
            REQUIRE((cls == LeafWordClass::tree_compatible) == is_tree(g));
        }
    }
}

TEST_CASE("leaf word text formats") {
    CHECK(format_leaf_word(parse_leaf_word("1,1,0")) == "110");
    CHECK(format_leaf_word(parse_leaf_word("1,1,0"), false) == "1,1,0");
    CHECK(format_leaf_word(parse_leaf_word("1,ω")) == "1,w");
    CHECK(parse_leaf_word("").empty());
    CHECK_THROWS(parse_leaf_word("1,x"));
    const auto lw = parse_leaf_word("1,1,1,-3,0,0,w,w");
    CHECK(parse_leaf_word(format_leaf_word(lw)) == lw);
}

TEST_CASE("realization") {
    const auto ok = realize_caterpillar(LeafFunction::from_ints({0, 0, 2, 2, 3, 4, 4, 5, 5, 6}));
    REQUIRE(std::holds_alternative<CaterpillarSequence>(ok));
    CHECK(std::get<CaterpillarSequence>(ok) == CaterpillarSequence{3, 1, 2});
    CHECK(graph_leaf_function(std::get<CaterpillarSequence>(ok)) == LeafFunction::from_ints({0, 0, 2, 2, 3, 4, 4, 5, 5, 6}));

    const auto chain3 = realize_caterpillar(LeafFunction::from_ints({0, 0, 2, 2}));
    REQUIRE(std::holds_alternative<CaterpillarSequence>(chain3));
    CHECK(std::get<CaterpillarSequence>(chain3) == CaterpillarSequence::identity());

    const auto bad = realize_caterpillar(leaf_function_from_word(W("1101011011")));
    REQUIRE(std::holds_alternative<Rejection>(bad));
    const auto& r = std::get<Rejection>(bad);
    CHECK(r.reason == Rejection::Reason::not_prefix_normal);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->prefix.str() == "11010");
    CHECK(r.witness->factor.str() == "11011");

    auto reason = [](const LeafFunction& lf) {
        const auto res = realize_caterpillar(lf);
        REQUIRE(std::holds_alternative<Rejection>(res));
        return std::get<Rejection>(res).reason;
    };
    CHECK(reason(LeafFunction::from_ints({0, 0, 2})) == Rejection::Reason::too_small);
    CHECK(reason(LeafFunction::from_ints({0, 0, 2, 3})) == Rejection::Reason::bad_prefix);
    CHECK(reason(LeafFunction::from_ints({0, 0, 2, -1})) == Rejection::Reason::bad_prefix);
    CHECK(reason(oracle::wheel_formula(10)) == Rejection::Reason::bad_alphabet);
    CHECK(reason(LeafFunction::from_ints({0, 0, 2, 2, 4})) == Rejection::Reason::bad_alphabet);
    CHECK(reason(LeafFunction::from_ints({0, 0, 2, 2, 3, 2})) == Rejection::Reason::bad_alphabet);
    CHECK(reason(LeafFunction::from_ints({0, 0, 2, 2, 3, -1})) == Rejection::Reason::bad_alphabet);
    CHECK(to_string(Rejection::Reason::not_prefix_normal) == "not-prefix-normal");

    // A leaf function is realized exactly when its word is prefix normal, and
    // the realization has that leaf function as a graph.
    for (std::size_t n = 0; n <= 9; ++n)
        for (const auto& w : all_words(n)) {
            const auto lf = leaf_function_from_word(w);
            const auto res = realize_caterpillar(lf);
            REQUIRE(std::holds_alternative<CaterpillarSequence>(res) == oracle::prefix_normal_naive(w.str()));
            if (const auto* s = std::get_if<CaterpillarSequence>(&res)) REQUIRE(graph_leaf_function(*s) == lf);
        }
}

TEST_CASE("leaf equivalence matches F1 equivalence") {
    CHECK(leaf_equivalent(W("01"), W("10")));
    CHECK(leaf_equivalent(W("00110101100"), W("11010110000")));
    CHECK_FALSE(leaf_equivalent(W("01"), W("11")));
    for (std::size_t n = 0; n <= 7; ++n) {
        const auto words = all_words(n);
        std::vector<LeafFunction> lfs;
        for (const auto& w : words) lfs.push_back(graph_leaf_function(rc(w)));
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = 0; b < words.size(); ++b) {
                const bool same_profile = oracle::profile_naive(words[a].str()) == oracle::profile_naive(words[b].str());
                REQUIRE((lfs[a] == lfs[b]) == same_profile);
                REQUIRE(leaf_equivalent(words[a], words[b]) == same_profile);
            }
    }
}

TEST_CASE("caterpillar leaf words are prefix normal forms") {
    for (std::size_t n = 0; n <= 10; ++n)
        for (const auto& w : all_words(n)) {
            const auto lw = as_binary(delta_leaf_word(graph_leaf_function(rc(w))));
            REQUIRE(lw.has_value());
            REQUIRE(lw->str() == pnf(w).str());
            REQUIRE(oracle::prefix_normal_naive(lw->str()));
        }
}
