// Slow, definitional reference computations used only by the tests. Nothing
// here calls into the library beyond its value types.
#pragma once

#include "leafword/binary_word.hpp"
#include "leafword/graph.hpp"
#include "leafword/leaf_function.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using leafword::BinaryWord;
using leafword::Graph;
using leafword::LeafFunction;
using leafword::LeafValue;

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Tree test by edge count plus union-find connectivity.
inline bool is_tree_uf(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (n == 0) return edges.empty();
    if (edges.size() != n - 1) return false;
    UnionFind uf(n);
    for (auto [u, v] : edges)
        if (!uf.unite(u, v)) return false;
    return true;
}

// L_G by scanning all 2^n vertex subsets.
inline LeafFunction leaf_function_subsets(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<long> best(n + 1, -1);
    best[0] = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> index(n, n);
        std::size_t size = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1) index[v] = size++;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::vector<std::size_t> deg(size, 0);
        for (const auto& e : g.edges()) {
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
                edges.emplace_back(index[e.u], index[e.v]);
                ++deg[index[e.u]], ++deg[index[e.v]];
            }
        }
        if (!is_tree_uf(size, edges)) continue;
        const long leaves = std::count(deg.begin(), deg.end(), std::size_t{1});
        best[size] = std::max(best[size], leaves);
    }
    std::vector<LeafValue> values;
    for (long b : best) values.push_back(b < 0 ? LeafValue::neg_inf() : LeafValue::finite(static_cast<std::uint32_t>(b)));
    return LeafFunction(std::move(values));
}

// Piecewise leaf function of the wheel with n rim vertices.
inline LeafFunction wheel_formula(std::size_t n) {
    std::vector<long> v(n + 2);
    for (std::size_t i = 0; i <= n + 1; ++i) {
        if (i <= 1) v[i] = 0;
        else if (i == 2) v[i] = 2;
        else if (i <= n / 2 + 1) v[i] = static_cast<long>(i) - 1;
        else if (i <= n - 1) v[i] = 2;
        else v[i] = -1;
    }
    std::vector<LeafValue> values;
    for (long b : v) values.push_back(b < 0 ? LeafValue::neg_inf() : LeafValue::finite(static_cast<std::uint32_t>(b)));
    return LeafFunction(std::move(values));
}

inline std::size_t ones(const std::string& s, std::size_t start, std::size_t len) {
    return static_cast<std::size_t>(std::count(s.begin() + start, s.begin() + start + len, '1'));
}

inline std::size_t f1_naive(const std::string& w, std::size_t i) {
    std::size_t best = 0;
    for (std::size_t s = 0; s + i <= w.size(); ++s) best = std::max(best, ones(w, s, i));
    return best;
}

inline std::vector<std::size_t> profile_naive(const std::string& w) {
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i <= w.size(); ++i) p.push_back(f1_naive(w, i));
    return p;
}

inline bool prefix_normal_naive(const std::string& w) {
    for (std::size_t i = 1; i <= w.size(); ++i)
        if (ones(w, 0, i) < f1_naive(w, i)) return false;
    return true;
}

inline std::vector<std::string> strings_of_length(std::size_t n) {
    std::vector<std::string> out;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if (b >> (n - 1 - i) & 1) s[i] = '1';
        out.push_back(s);
    }
    return out;
}

// rc by the graft definition: rc(u0) = rc(u) graft (1,1), rc(u1) = rc(u) graft (3).
inline std::vector<std::uint32_t> rc_by_graft(const std::string& w) {
    std::vector<std::uint32_t> s{2};
    for (char c : w) {
        const std::vector<std::uint32_t> t = c == '0' ? std::vector<std::uint32_t>{1, 1} : std::vector<std::uint32_t>{3};
        std::vector<std::uint32_t> g(s.begin(), s.end() - 1);
        g.push_back(s.back() + t.front() - 2);
        g.insert(g.end(), t.begin() + 1, t.end());
        s = g;
    }
    return s;
}

// Edge set of g relabeled by perm, sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> relabel(const Graph& g, const std::vector<std::size_t>& perm) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& e : g.edges()) {
        auto a = perm[e.u], b = perm[e.v];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> edge_pairs(const Graph& g) {
    std::vector<std::size_t> id(g.order());
    std::iota(id.begin(), id.end(), 0);
    return relabel(g, id);
}

// Isomorphism and automorphism counts by trying every permutation.
inline bool isomorphic_bruteforce(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    const auto target = edge_pairs(b);
    std::vector<std::size_t> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel(a, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::size_t automorphisms(const Graph& g) {
    const auto target = edge_pairs(g);
    std::vector<std::size_t> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do count += relabel(g, perm) == target;
    while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Labeled trees on n vertices decoded from Pruefer sequences.
inline std::set<std::vector<std::pair<std::size_t, std::size_t>>> labeled_trees(std::size_t n) {
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> out;
    std::vector<std::size_t> code(n - 2, 0);
    while (true) {
        std::vector<std::size_t> degree(n, 1);
        for (auto c : code) ++degree[c];
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (auto c : code) {
            std::size_t leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
            --degree[leaf], --degree[c];
        }
        std::vector<std::size_t> rest;
        for (std::size_t v = 0; v < n; ++v)
            if (degree[v] == 1) rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
        std::sort(edges.begin(), edges.end());
        out.insert(edges);
        std::size_t pos = 0;
        while (pos < code.size() && ++code[pos] == n) code[pos++] = 0;
        if (pos == code.size()) break;
    }
    return out;
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<std::pair<leafword::Vertex, leafword::Vertex>> edges;
    std::size_t bit = 0;
    for (leafword::Vertex u = 0; u < n; ++u)
        for (leafword::Vertex v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace oracle
