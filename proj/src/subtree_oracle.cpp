#include "leafword/subtree_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace leafword {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

struct MaskGraph {
    std::size_t n;
    std::vector<Mask> nbr;

    explicit MaskGraph(const Graph& g) : n(g.order()), nbr(g.order(), 0) {
        if (n > kMaxOracleVertices) throw std::invalid_argument("subtree enumeration supports at most 64 vertices");
        for (const auto& e : g.edges()) {
            nbr[e.u] |= bit(e.v);
            nbr[e.v] |= bit(e.u);
        }
    }
};

enum class Step { descend, prune, stop };

// Grows the trees whose smallest vertex is `anchor`, up to max_size
// vertices, calling visit(set, size, leaves) on each. The visitor answers
// whether to grow the current tree further, skip its extensions, or stop.
template <class Visitor>
class TreeGrower {
public:
    TreeGrower(const MaskGraph& g, Vertex anchor, std::size_t max_size, Visitor& visit)
        : g_(g), anchor_(anchor), max_size_(max_size), visit_(visit) {
        allowed_ = ~Mask{0} << anchor;
        if (g.n < 64) allowed_ &= (Mask{1} << g.n) - 1;
    }

    // False if the visitor stopped the enumeration.
    bool run() {
        const Mask s = bit(anchor_);
        return extend(s, g_.nbr[anchor_] & allowed_, s | g_.nbr[anchor_], 1, 0);
    }

private:
    bool extend(Mask set, Mask ext, Mask closed_nbhd, std::size_t size, std::size_t leaves) {
        const Step step = visit_(set, size, leaves);
        if (step == Step::stop) return false;
        if (step == Step::prune || size == max_size_) return true;
        while (ext) {
            const Vertex w = static_cast<Vertex>(std::countr_zero(ext));
            ext &= ext - 1;
            const Mask attach = g_.nbr[w] & set;
            if (std::popcount(attach) != 1) continue;  // closes a cycle
            const Vertex parent = static_cast<Vertex>(std::countr_zero(attach));
            const int parent_deg = std::popcount(g_.nbr[parent] & set);
            std::size_t next_leaves = leaves + 1;
            if (parent_deg == 1) --next_leaves;
            else if (parent_deg == 0) ++next_leaves;
            const Mask exclusive = g_.nbr[w] & ~closed_nbhd & allowed_;
            if (!extend(set | bit(w), ext | exclusive, closed_nbhd | g_.nbr[w], size + 1, next_leaves)) return false;
        }
        return true;
    }

    const MaskGraph& g_;
    Vertex anchor_;
    std::size_t max_size_;
    Visitor& visit_;
    Mask allowed_ = 0;
};

template <class Visitor>
bool grow_from(const MaskGraph& g, Vertex anchor, std::size_t max_size, Visitor& visit) {
    TreeGrower<Visitor> grower(g, anchor, max_size, visit);
    return grower.run();
}

// best[i] = max leaves seen at size i, -1 for none.
using BestTable = std::vector<long>;

BestTable best_from_anchor_range(const MaskGraph& g, Vertex first, Vertex last) {
    BestTable best(g.n + 1, -1);
    auto record = [&best](Mask, std::size_t size, std::size_t leaves) {
        best[size] = std::max(best[size], static_cast<long>(leaves));
        return Step::descend;
    };
    for (Vertex a = first; a < last; ++a) grow_from(g, a, g.n, record);
    return best;
}

LeafFunction to_leaf_function(BestTable best) {
    best[0] = 0;
    std::vector<LeafValue> values;
    values.reserve(best.size());
    for (long b : best) values.push_back(b < 0 ? kNegInf : LeafValue::finite(static_cast<std::uint32_t>(b)));
    return LeafFunction(std::move(values));
}

void check_bound(const Graph& g, std::size_t max_vertices) {
    if (g.order() > std::min(max_vertices, kMaxOracleVertices))
        throw std::invalid_argument("graph has " + std::to_string(g.order()) + " vertices, enumeration bound is " +
                                    std::to_string(std::min(max_vertices, kMaxOracleVertices)));
}

std::vector<Vertex> mask_to_vertices(Mask m) {
    std::vector<Vertex> out;
    while (m) {
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

}  // namespace

LeafFunction leaf_function_bruteforce(const Graph& g, const OracleOptions& options) {
    check_bound(g, options.max_vertices);
    const MaskGraph mg(g);
    if (options.execution == Execution::sequential) return to_leaf_function(best_from_anchor_range(mg, 0, static_cast<Vertex>(mg.n)));

    BestTable best(mg.n + 1, -1);
    const long long n = static_cast<long long>(mg.n);
#pragma omp parallel
    {
        BestTable local(mg.n + 1, -1);
        auto record = [&local](Mask, std::size_t size, std::size_t leaves) {
            local[size] = std::max(local[size], static_cast<long>(leaves));
            return Step::descend;
        };
#pragma omp for schedule(dynamic, 1) nowait
        for (long long a = 0; a < n; ++a) grow_from(mg, static_cast<Vertex>(a), mg.n, record);
#pragma omp critical(leafword_best_merge)
        for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::max(best[i], local[i]);
    }
    return to_leaf_function(std::move(best));
}

LeafFunction leaf_function_pruned(const Graph& g, std::size_t max_vertices) {
    check_bound(g, max_vertices);
    const MaskGraph mg(g);
    BestTable best(mg.n + 1, -1);

    // Upper bound on the leaves of a size-t tree grown from one of `size`
    // vertices and `leaves` leaves: each added vertex adds at most one leaf.
    auto optimistic = [](std::size_t size, std::size_t leaves, std::size_t t) -> long {
        if (t == 2) return 2;
        const long cap = static_cast<long>(t) - 1;
        if (size == 1) return cap;
        return std::min(cap, static_cast<long>(leaves + (t - size)));
    };

    for (Vertex a = 0; a < mg.n; ++a) {
        const std::size_t reachable = mg.n - a;
        auto bound = [&](Mask, std::size_t size, std::size_t leaves) {
            best[size] = std::max(best[size], static_cast<long>(leaves));
            for (std::size_t t = size + 1; t <= reachable; ++t)
                if (optimistic(size, leaves, t) > best[t]) return Step::descend;
            return Step::prune;
        };
        grow_from(mg, a, mg.n, bound);
    }
    return to_leaf_function(std::move(best));
}

std::optional<std::vector<Vertex>> fully_leafed_witness(const Graph& g, std::size_t i, std::size_t max_vertices) {
    if (i > g.order()) throw std::out_of_range("witness size exceeds vertex count");
    if (i == 0) return std::vector<Vertex>{};
    const auto lf = leaf_function_bruteforce(g, {max_vertices, Execution::parallel});
    if (!lf[i].is_finite()) return std::nullopt;
    const std::size_t target = lf[i].value();

    const MaskGraph mg(g);
    std::optional<Mask> found;
    auto stop_at_match = [&](Mask set, std::size_t size, std::size_t leaves) {
        if (size == i && leaves == target) {
            found = set;
            return Step::stop;
        }
        return Step::descend;
    };
    for (Vertex a = 0; a < mg.n && !found; ++a) grow_from(mg, a, i, stop_at_match);
    if (!found) throw std::logic_error("fully_leafed_witness: value without witness");
    return mask_to_vertices(*found);
}

void for_each_induced_subtree(const Graph& g, std::size_t i,
                              const std::function<void(std::span<const Vertex>)>& visit) {
    if (i > g.order()) throw std::out_of_range("subtree size exceeds vertex count");
    if (i == 0) {
        visit({});
        return;
    }
    const MaskGraph mg(g);
    auto emit = [&](Mask set, std::size_t size, std::size_t) {
        if (size == i) {
            const auto vs = mask_to_vertices(set);
            visit(vs);
        }
        return Step::descend;
    };
    for (Vertex a = 0; a < mg.n; ++a) grow_from(mg, a, i, emit);
}

std::vector<std::vector<Vertex>> enumerate_induced_subtrees(const Graph& g, std::size_t i) {
    std::vector<std::vector<Vertex>> out;
    for_each_induced_subtree(g, i, [&out](std::span<const Vertex> s) { out.emplace_back(s.begin(), s.end()); });
    return out;
}

namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
    std::vector<std::string> children;
    for (Vertex w : t.neighbors(v))
        if (w != parent) children.push_back(rooted_code(t, w, v));
    std::sort(children.begin(), children.end());
    std::string code = "(";
    for (const auto& c : children) code += c;
    code += ")";
    return code;
}

std::vector<Vertex> tree_centers(const Graph& t) {
    const std::size_t n = t.order();
    if (n <= 2) {
        std::vector<Vertex> all;
        for (Vertex v = 0; v < n; ++v) all.push_back(v);
        return all;
    }
    std::vector<std::size_t> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : t.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

std::string canonical_tree_code(const Graph& tree) {
    if (!is_tree(tree)) throw std::invalid_argument("canonical_tree_code: not a tree");
    if (tree.order() == 0) return "";
    std::string best;
    for (Vertex c : tree_centers(tree)) {
        auto code = rooted_code(tree, c, static_cast<Vertex>(-1));
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::vector<Graph> enumerate_free_trees(std::size_t n) {
    if (n < 1 || n > 14) throw std::invalid_argument("enumerate_free_trees: n must be in [1, 14]");
    std::map<std::string, Graph> level{{canonical_tree_code(Graph(1)), Graph(1)}};
    for (std::size_t m = 2; m <= n; ++m) {
        std::map<std::string, Graph> next;
        for (const auto& [code, t] : level) {
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (const auto& e : t.edges()) edges.emplace_back(e.u, e.v);
            for (Vertex v = 0; v < t.order(); ++v) {
                edges.emplace_back(v, static_cast<Vertex>(m - 1));
                Graph grown(m, edges);
                edges.pop_back();
                auto c = canonical_tree_code(grown);
                next.try_emplace(std::move(c), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (auto& [code, t] : level) out.push_back(std::move(t));
    return out;
}

}  // namespace leafword
