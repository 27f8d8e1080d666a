#include "leafword/caterpillar.hpp"
#include "leafword/graph.hpp"
#include "leafword/subtree_oracle.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

#include <sstream>

using namespace leafword;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph triangle() {
    const EdgeList e{{0, 1}, {1, 2}, {0, 2}};
    return Graph(3, e);
}

bool tree_by_union_find(const Graph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    return oracle::is_tree_uf(g.order(), edges);
}

}  // namespace

TEST_CASE("graph construction canonicalizes and validates edges") {
    const EdgeList e{{2, 0}, {1, 0}};
    const Graph g(3, e);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{0, 2});
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK(g.degree(0) == 2);

    const EdgeList loop{{1, 1}};
    CHECK_THROWS_AS(Graph(2, loop), std::invalid_argument);
    const EdgeList dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(2, dup), std::invalid_argument);
    const EdgeList far{{0, 5}};
    CHECK_THROWS_AS(Graph(3, far), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
    const auto path = chain(3);
    const std::vector<Vertex> u{0, 1};
    const auto sub = induced_subgraph(path, u);
    CHECK(sub.graph.order() == 2);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.original_vertex == std::vector<Vertex>{0, 1});

    CHECK(induced_subgraph(wheel(5), {}).graph.order() == 0);

    const std::vector<Vertex> bad{7};
    CHECK_THROWS_AS(induced_subgraph(path, bad), std::out_of_range);

    const std::vector<Vertex> dup{2, 0, 2};
    CHECK(induced_subgraph(path, dup).graph.order() == 2);
    CHECK(induced_subgraph(path, dup).graph.edge_count() == 0);

    // A fully leafed 7-set of W10: hub-free path along the rim.
    const std::vector<Vertex> rim{1, 2, 3, 4, 5, 6, 7};
    const auto t = induced_subgraph(wheel(10), rim).graph;
    CHECK(is_tree(t));
    CHECK(leaf_count(t) == 2);
}

TEST_CASE("is_tree and leaf_count") {
    CHECK(is_tree(chain(3)));
    CHECK_FALSE(is_tree(triangle()));
    CHECK_FALSE(is_tree(wheel(10)));
    CHECK(is_tree(Graph(0)));
    CHECK_FALSE(is_tree(Graph(2)));

    CHECK(leaf_count(Graph(1)) == 0);
    CHECK(leaf_count(chain(2)) == 2);
    CHECK(leaf_count(star(5)) == 5);
    CHECK_THROWS_AS(leaf_count(triangle()), std::invalid_argument);
}

TEST_CASE("is_tree agrees with union-find on every graph with at most 5 vertices") {
    for (std::size_t n = 0; n <= 5; ++n) {
        const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const auto g = oracle::graph_from_mask(n, mask);
            REQUIRE(is_tree(g) == tree_by_union_find(g));
        }
    }
}

TEST_CASE("wheel") {
    const auto k4 = wheel(3);
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);

    const auto w10 = wheel(10);
    CHECK(w10.order() == 11);
    CHECK(w10.edge_count() == 20);

    const auto w4 = wheel(4);
    CHECK(w4.degree(0) == 4);
    for (Vertex v = 1; v <= 4; ++v) CHECK(w4.degree(v) == 3);

    CHECK_THROWS_AS(wheel(2), std::invalid_argument);
    CHECK_FALSE(tree_by_union_find(w10));
}

TEST_CASE("stars, chains and caterpillars") {
    CHECK(canonical_tree_code(caterpillar_graph(CaterpillarSequence{2})) == canonical_tree_code(chain(3)));
    const auto c = caterpillar_graph(CaterpillarSequence{3, 0, 2, 4, 0, 1});
    CHECK(c.order() == 16);
    CHECK(leaf_count(c) == 10);
    CHECK(caterpillar_graph(CaterpillarSequence{5}) == star(5));
    CHECK(chain(1).order() == 1);
    CHECK_THROWS(chain(0));

    // Spine degrees read off the graph.
    const auto degrees = spine_degrees(CaterpillarSequence{3, 0, 2, 4, 0, 1});
    for (Vertex v = 0; v < 6; ++v) CHECK(c.degree(v) == degrees[v]);
}

TEST_CASE("caterpillar graphs have the advertised size and leaves") {
    for (std::size_t size = 3; size <= 14; ++size) {
        for (const auto& s : all_caterpillar_sequences(size)) {
            const auto g = caterpillar_graph(s);
            REQUIRE(g.order() == size);
            REQUIRE(tree_by_union_find(g));
            REQUIRE(is_tree(g));
            REQUIRE(leaf_count(g) == s.leaves());
        }
    }
    // A few long ones up to size 20.
    for (const auto& s : {CaterpillarSequence{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, CaterpillarSequence{18},
                          CaterpillarSequence{4, 0, 3, 0, 2, 0, 1}}) {
        const auto g = caterpillar_graph(s);
        CHECK(g.order() == s.size());
        CHECK(leaf_count(g) == s.leaves());
    }
}

TEST_CASE("fk trees") {
    CHECK(fk_tree(1).order() == 13);
    CHECK(fk_tree(2).order() == 19);
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto g = fk_tree(k);
        CHECK(g.order() == 6 * k + 7);
        CHECK(tree_by_union_find(g));
        CHECK(leaf_count(g) == 3 * (k + 2));
    }
    CHECK_THROWS_AS(fk_tree(0), std::invalid_argument);
}

TEST_CASE("edge list round trip and dot export") {
    const auto g = wheel(5);
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(ss.str().rfind("6 10\n", 0) == 0);
    CHECK(read_edge_list(ss) == g);

    std::istringstream bad_count("3 2\n0 1\n");
    CHECK_THROWS(read_edge_list(bad_count));
    std::istringstream trailing("2 1\n0 1\n5\n");
    CHECK_THROWS(read_edge_list(trailing));
    std::istringstream empty("0 0\n");
    CHECK(read_edge_list(empty).order() == 0);

    const std::vector<Vertex> hl{1};
    const auto dot = to_dot(chain(3), hl);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("1 [color=blue]") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
}
