// subtree_oracle.hpp - exhaustive induced-subtree enumeration.
//
// Ground truth for leaf functions: L_G(i) is the maximum number of leaves of
// an induced subtree of G on i vertices, -inf when there is none. Subtrees
// are grown from each anchor vertex using only larger vertices, adding one
// vertex of the exclusive neighborhood at a time, so every vertex set that
// induces a tree is visited exactly once. Branches that close a cycle are cut
// immediately since no superset can be a tree again.
#pragma once

#include "leafword/execution.hpp"
#include "leafword/graph.hpp"
#include "leafword/leaf_function.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace leafword {

// Hard limit of the bitset engine.
inline constexpr std::size_t kMaxOracleVertices = 64;

struct OracleOptions {
    std::size_t max_vertices = 20;
    Execution execution = Execution::parallel;
};

// Throws std::invalid_argument when g.order() exceeds options.max_vertices.
LeafFunction leaf_function_bruteforce(const Graph& g, const OracleOptions& options = {});

// Same values as leaf_function_bruteforce, but abandons a branch once no
// size it can still reach has an optimistic leaf bound above the best found
// so far. Sequential. For larger sparse graphs such as F_3.
LeafFunction leaf_function_pruned(const Graph& g, std::size_t max_vertices = kMaxOracleVertices);

// First vertex set of size i in sequential enumeration order that induces a
// tree with L_G(i) leaves, sorted ascending; nullopt iff L_G(i) = -inf.
// Throws std::out_of_range for i > n.
std::optional<std::vector<Vertex>> fully_leafed_witness(const Graph& g, std::size_t i,
                                                        std::size_t max_vertices = 20);

// Visits every vertex set of size i inducing a tree, once each, in a fixed
// order. Sets are sorted ascending. Throws std::out_of_range for i > n.
void for_each_induced_subtree(const Graph& g, std::size_t i,
                              const std::function<void(std::span<const Vertex>)>& visit);
std::vector<std::vector<Vertex>> enumerate_induced_subtrees(const Graph& g, std::size_t i);

// Canonical string of a tree: AHU encoding rooted at its center, taking the
// smaller encoding when there are two centers. Equal iff isomorphic.
std::string canonical_tree_code(const Graph& tree);

// One tree per isomorphism class on n vertices, ordered by canonical code.
// 1 <= n <= 14.
std::vector<Graph> enumerate_free_trees(std::size_t n);

}  // namespace leafword
