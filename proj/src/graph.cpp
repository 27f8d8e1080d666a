#include "leafword/graph.hpp"

#include "leafword/caterpillar.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace leafword {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) : adjacency_(n) {
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n || b >= n)
            throw std::invalid_argument("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                        "} has an endpoint >= " + std::to_string(n));
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    for (const auto& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adjacency_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> u) {
    std::vector<Vertex> kept(u.begin(), u.end());
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (!kept.empty() && kept.back() >= g.order())
        throw std::out_of_range("induced_subgraph: vertex " + std::to_string(kept.back()) + " out of range");

    std::vector<Vertex> relabel(g.order(), static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < kept.size(); ++i) relabel[kept[i]] = static_cast<Vertex>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : g.edges())
        if (relabel[e.u] != static_cast<Vertex>(-1) && relabel[e.v] != static_cast<Vertex>(-1))
            edges.emplace_back(relabel[e.u], relabel[e.v]);
    return {Graph(kept.size(), edges), std::move(kept)};
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<bool> seen(g.order(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.order();
}

bool is_tree(const Graph& g) {
    if (g.order() == 0) return true;
    return g.edge_count() + 1 == g.order() && is_connected(g);
}

std::size_t leaf_count(const Graph& g) {
    if (!is_tree(g)) throw std::invalid_argument("leaf_count: graph is not a tree");
    std::size_t leaves = 0;
    for (Vertex v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1;
    return leaves;
}

Graph wheel(std::size_t n) {
    if (n < 3) throw std::invalid_argument("wheel needs a rim of at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 1; i <= n; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i == n ? 1 : i + 1);
    }
    return Graph(n + 1, edges);
}

Graph star(std::size_t m) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 1; i <= m; ++i) edges.emplace_back(0, i);
    return Graph(m + 1, edges);
}

Graph chain(std::size_t n) {
    if (n < 1) throw std::invalid_argument("chain needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph caterpillar_graph(const CaterpillarSequence& s) {
    const auto k = static_cast<Vertex>(s.length());
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    Vertex next = k;
    for (Vertex i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < s[i]; ++j) edges.emplace_back(i, next++);
    return Graph(next, edges);
}

Graph fk_tree(std::size_t k) {
    if (k < 1) throw std::invalid_argument("fk_tree needs k >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex next = 1;
    for (int arm = 0; arm < 3; ++arm) {
        Vertex prev = 0;
        for (std::size_t j = 0; j + 1 < k; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        const Vertex center = next++;
        edges.emplace_back(prev, center);
        for (std::size_t j = 0; j < k + 2; ++j) edges.emplace_back(center, next++);
    }
    return Graph(next, edges);
}

Graph read_edge_list(std::istream& in) {
    std::size_t n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: expected header \"n m\"");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        long long a = 0, b = 0;
        if (!(in >> a >> b)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges");
        if (a < 0 || b < 0) throw std::invalid_argument("edge list: negative vertex id");
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    std::string trailing;
    if (in >> trailing) throw std::invalid_argument("edge list: unexpected trailing data '" + trailing + "'");
    return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_dot(const Graph& g, std::span<const Vertex> highlight) {
    std::vector<bool> marked(g.order(), false);
    for (Vertex v : highlight)
        if (v < g.order()) marked[v] = true;
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (marked[v]) out << " [color=blue]";
        out << ";\n";
    }
    for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace leafword
