// graph.hpp - simple undirected graphs on dense vertex ids and the named
// families used throughout the library (wheels, stars, chains, caterpillars,
// the F_k trees).
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace leafword {

class CaterpillarSequence;

using Vertex = std::uint32_t;

// Canonical edge: first < second.
struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    // Throws std::invalid_argument on self-loops, duplicate edges or
    // endpoints >= n. Edge orientation in the input does not matter.
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t order() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Sorted, canonical (min, max) pairs.
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted neighbor list.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    bool operator==(const Graph& other) const { return edges_ == other.edges_ && order() == other.order(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

struct InducedSubgraph {
    Graph graph;
    // original_vertex[i] is the vertex of the parent graph relabeled to i.
    std::vector<Vertex> original_vertex;
};

// G[U], vertices relabeled 0..|U|-1 in increasing original order. Duplicate
// entries in u are ignored; throws std::out_of_range for u[i] >= n.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> u);

bool is_connected(const Graph& g);

// Connected with n-1 edges. The empty graph counts as the empty tree.
bool is_tree(const Graph& g);

// Number of degree-1 vertices. Throws std::invalid_argument if g is not a tree.
std::size_t leaf_count(const Graph& g);

// Rim cycle on vertices 1..n plus hub 0. Requires n >= 3.
Graph wheel(std::size_t n);

// K_{1,m}: center 0, leaves 1..m.
Graph star(std::size_t m);

// Path on n >= 1 vertices 0 - 1 - ... - n-1.
Graph chain(std::size_t n);

// Spine vertices 0..k-1 in order, then the pendant leaves of spine vertex 0,
// then those of spine vertex 1, and so on.
Graph caterpillar_graph(const CaterpillarSequence& s);

// Hub 0 joined through three chains of k-1 vertices to the centers of three
// stars with k+2 leaves each; 6k+7 vertices. For k = 1 the hub is adjacent
// to the star centers directly. Requires k >= 1.
Graph fk_tree(std::size_t k);

// Edge-list text: "n m" on the first line, then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Graphviz undirected graph; vertices in `highlight` get color=blue.
std::string to_dot(const Graph& g, std::span<const Vertex> highlight = {});

}  // namespace leafword
