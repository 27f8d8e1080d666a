#include "leafword/verify.hpp"

#include "leafword/caterpillar.hpp"
#include "leafword/graph.hpp"
#include "leafword/leaf_words.hpp"
#include "leafword/reference.hpp"
#include "leafword/subtree_oracle.hpp"
#include "leafword/words.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

namespace leafword {

namespace {

using Failure = std::optional<std::string>;

std::string paren(const CaterpillarSequence& s) {
    return "(" + s.str() + ")";
}

std::string quoted(const BinaryWord& w) {
    return "'" + w.str() + "'";
}

std::vector<CaterpillarSequence> sequences_up_to(std::size_t max_size) {
    std::vector<CaterpillarSequence> out;
    for (std::size_t n = 3; n <= max_size; ++n) {
        auto level = all_caterpillar_sequences(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<BinaryWord> words_up_to(std::size_t max_len) {
    std::vector<BinaryWord> out;
    for (std::size_t n = 0; n <= max_len; ++n) {
        auto level = all_words(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// Leaf function of rc(w) computed from the graph, independently of F_1.
LeafFunction oracle_of(const CaterpillarSequence& s) {
    return leaf_function_bruteforce(caterpillar_graph(s), {kMaxOracleVertices, Execution::sequential});
}

class ClaimRunner {
public:
    ClaimRunner(Suite suite, std::size_t bound, Execution exec, std::vector<VerifyReport>& out)
        : suite_(suite), bound_(bound), exec_(exec), out_(out) {}

    // check(i) returns the counterexample for instance i, if any.
    template <class Check>
    void claim(std::string name, std::size_t count, Check&& check) {
        const auto start = std::chrono::steady_clock::now();
        std::vector<Failure> results(count);
        const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 4) if (exec_ == Execution::parallel)
        for (long long i = 0; i < n; ++i) results[static_cast<std::size_t>(i)] = check(static_cast<std::size_t>(i));

        VerifyReport r;
        r.suite = std::string(to_string(suite_));
        r.claim = std::move(name);
        r.bound = bound_;
        r.checked = count;
        for (auto& f : results)
            if (f) r.failures.push_back(std::move(*f));
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out_.push_back(std::move(r));
    }

private:
    Suite suite_;
    std::size_t bound_;
    Execution exec_;
    std::vector<VerifyReport>& out_;
};

void poset_suite(ClaimRunner& run, std::size_t bound) {
    const auto seqs = sequences_up_to(bound);
    const std::size_t m = seqs.size();

    run.claim("reflexive", m, [&](std::size_t i) -> Failure {
        if (!is_subsequence(seqs[i], seqs[i])) return paren(seqs[i]);
        return std::nullopt;
    });
    run.claim("antisymmetric", m, [&](std::size_t i) -> Failure {
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && is_subsequence(seqs[i], seqs[j]) && is_subsequence(seqs[j], seqs[i]))
                return paren(seqs[i]) + " " + paren(seqs[j]);
        return std::nullopt;
    });
    run.claim("transitive", m, [&](std::size_t i) -> Failure {
        for (std::size_t j = 0; j < m; ++j) {
            if (!is_subsequence(seqs[i], seqs[j])) continue;
            for (std::size_t k = 0; k < m; ++k)
                if (is_subsequence(seqs[j], seqs[k]) && !is_subsequence(seqs[i], seqs[k]))
                    return paren(seqs[i]) + " " + paren(seqs[j]) + " " + paren(seqs[k]);
        }
        return std::nullopt;
    });
    run.claim("order-bounds-size", m, [&](std::size_t i) -> Failure {
        for (std::size_t j = 0; j < m; ++j)
            if (is_subsequence(seqs[i], seqs[j]) && seqs[i].size() > seqs[j].size())
                return paren(seqs[i]) + " " + paren(seqs[j]);
        return std::nullopt;
    });
    // {(1,1), (3)} has several minimal upper bounds, so no join.
    run.claim("not-a-lattice", bound >= 5 ? 1 : 0, [&](std::size_t) -> Failure {
        const CaterpillarSequence a{1, 1}, b{3};
        std::vector<CaterpillarSequence> upper;
        for (const auto& y : seqs)
            if (is_subsequence(a, y) && is_subsequence(b, y)) upper.push_back(y);
        std::size_t minimal = 0;
        for (const auto& y : upper) {
            bool is_min = std::none_of(upper.begin(), upper.end(),
                                       [&](const auto& z) { return z != y && is_subsequence(z, y); });
            minimal += is_min;
        }
        if (minimal < 2) return "minimal upper bounds: " + std::to_string(minimal);
        return std::nullopt;
    });
}

void morphism_suite(ClaimRunner& run, std::size_t bound) {
    const auto seqs = sequences_up_to(bound);
    const std::size_t m = seqs.size();
    const auto e = CaterpillarSequence::identity();

    run.claim("graft-identity", m, [&](std::size_t i) -> Failure {
        if (graft(e, seqs[i]) != seqs[i] || graft(seqs[i], e) != seqs[i]) return paren(seqs[i]);
        return std::nullopt;
    });
    run.claim("graft-associative", m, [&](std::size_t i) -> Failure {
        for (const auto& t : seqs)
            for (const auto& u : seqs)
                if (graft(graft(seqs[i], t), u) != graft(seqs[i], graft(t, u)))
                    return paren(seqs[i]) + " " + paren(t) + " " + paren(u);
        return std::nullopt;
    });
    run.claim("graft-size-leaves", m, [&](std::size_t i) -> Failure {
        const auto& s = seqs[i];
        for (const auto& t : seqs) {
            const auto g = graft(s, t);
            if (g.size() != s.size() + t.size() - 3 || g.leaves() + 2 != s.leaves() + t.leaves())
                return paren(s) + " " + paren(t);
        }
        return std::nullopt;
    });
    run.claim("graft-reversal", m, [&](std::size_t i) -> Failure {
        const auto& s = seqs[i];
        for (const auto& t : seqs)
            if (graft(s, t).reversed() != graft(t.reversed(), s.reversed())) return paren(s) + " " + paren(t);
        return std::nullopt;
    });
    run.claim("graft-dominates-factors", m, [&](std::size_t i) -> Failure {
        const auto& s = seqs[i];
        for (const auto& t : seqs) {
            const auto g = graft(s, t);
            if (!is_subsequence(s, g) || !is_subsequence(t, g)) return paren(s) + " " + paren(t);
        }
        return std::nullopt;
    });
    run.claim("left-right-cuts", m, [&](std::size_t idx) -> Failure {
        const auto& s = seqs[idx];
        for (std::size_t i = 3; i <= s.size(); ++i) {
            const auto l = left(s, i);
            const auto r = right(s, i);
            if (l != reference::left_recursive(s, i) || r != reference::right_recursive(s, i) || l.size() != i ||
                r.size() != i || !is_subsequence(l, s) || !is_subsequence(r, s) ||
                left(s.reversed(), i) != r.reversed())
                return paren(s) + " i=" + std::to_string(i);
            const auto [a, alpha] = alpha_beta_left(s, i);
            std::size_t rebuilt = alpha + 1;
            for (std::size_t t = 0; t < a; ++t) rebuilt += s[t] + 1;
            if (a > s.length() - 1 || alpha < 1 || alpha > s[a] + 1 || rebuilt != i)
                return paren(s) + " alpha-cut i=" + std::to_string(i);
        }
        return std::nullopt;
    });
    run.claim("decompose-graft", m, [&](std::size_t idx) -> Failure {
        const auto& s = seqs[idx];
        for (std::size_t i = 3; i <= s.size(); ++i) {
            const auto [l, r] = decompose(s, i);
            if (graft(l, r) != s) return paren(s) + " i=" + std::to_string(i);
        }
        return std::nullopt;
    });

    const std::size_t half = bound >= 2 ? bound - 2 : 0;
    const auto short_words = words_up_to(half);
    run.claim("rc-morphism", short_words.size(), [&](std::size_t i) -> Failure {
        const auto& u = short_words[i];
        if (rc(u.reversed()) != rc(u).reversed()) return "reversal " + quoted(u);
        for (const auto& v : short_words)
            if (rc(u + v) != graft(rc(u), rc(v))) return quoted(u) + " " + quoted(v);
        return std::nullopt;
    });
    const auto long_words = words_up_to(bound + 4);
    run.claim("rc-word-of-inverse", long_words.size(), [&](std::size_t i) -> Failure {
        const auto& w = long_words[i];
        if (word_of(rc(w)) != w) return quoted(w);
        return std::nullopt;
    });
    run.claim("word-of-rc-inverse", m, [&](std::size_t i) -> Failure {
        if (rc(word_of(seqs[i])) != seqs[i]) return paren(seqs[i]);
        return std::nullopt;
    });

    const auto words = words_up_to(bound);
    run.claim("reading-caterpillar-cuts", words.size(), [&](std::size_t idx) -> Failure {
        const auto& w = words[idx];
        const auto r = rc(w);
        if (r.size() != w.size() + 3) return quoted(w) + " size";
        if (r.leaves() != w.ones() + 2) return quoted(w) + " leaves";
        for (std::uint8_t a : {std::uint8_t{0}, std::uint8_t{1}}) {
            auto wa = w;
            wa.push_back(a);
            if (rc(wa).leaves() != r.leaves() + a) return quoted(w) + " append " + std::to_string(a);
        }
        for (std::size_t i = 3; i <= w.size() + 3; ++i) {
            const auto p = w.prefix(i - 3);
            const auto q = w.suffix(i - 3);
            if (left(r, i) != rc(p) || right(r, i) != rc(q) || left(r, i).leaves() != p.ones() + 2 ||
                right(r, i).leaves() != q.ones() + 2)
                return quoted(w) + " i=" + std::to_string(i);
        }
        return std::nullopt;
    });
}

void round_trip_suite(ClaimRunner& run, std::size_t bound) {
    std::vector<BinaryWord> pnw;
    for (std::size_t n = 0; n <= bound; ++n) {
        auto level = enumerate_pnw(n);
        pnw.insert(pnw.end(), level.begin(), level.end());
    }
    const auto words = words_up_to(bound);

    run.claim("prefix-normal-roundtrip", pnw.size(), [&](std::size_t i) -> Failure {
        const auto& w = pnw[i];
        if (as_binary(delta_leaf_word(oracle_of(rc(w)))) != w) return quoted(w);
        return std::nullopt;
    });
    run.claim("leaf-word-is-pnf", words.size(), [&](std::size_t i) -> Failure {
        const auto& w = words[i];
        const auto lw = as_binary(delta_leaf_word(oracle_of(rc(w))));
        if (!lw || *lw != pnf(w) || !is_prefix_normal(*lw)) return quoted(w);
        return std::nullopt;
    });
    run.claim("left-cut-fully-leafed", pnw.size(), [&](std::size_t idx) -> Failure {
        const auto& w = pnw[idx];
        const auto r = rc(w);
        const auto lf = oracle_of(r);
        for (std::size_t i = 3; i <= w.size() + 3; ++i)
            if (lf[i] != LeafValue::finite(static_cast<std::uint32_t>(left(r, i).leaves())))
                return quoted(w) + " i=" + std::to_string(i);
        return std::nullopt;
    });
    run.claim("fast-leaf-function", words.size(), [&](std::size_t i) -> Failure {
        const auto r = rc(words[i]);
        if (leaf_function_caterpillar(r) != oracle_of(r)) return paren(r);
        return std::nullopt;
    });
    run.claim("realize-decision", words.size(), [&](std::size_t i) -> Failure {
        const auto& w = words[i];
        const auto lf = leaf_function_from_word(w);
        const auto result = realize_caterpillar(lf);
        const auto* s = std::get_if<CaterpillarSequence>(&result);
        if ((s != nullptr) != is_prefix_normal(w)) return quoted(w) + " decision";
        if (s && oracle_of(*s) != lf) return quoted(w) + " realization";
        return std::nullopt;
    });
    run.claim("violation-witness", words.size(), [&](std::size_t i) -> Failure {
        const auto& w = words[i];
        const auto v = find_prefix_normal_violation(w);
        if (v.has_value() == is_prefix_normal(w)) return quoted(w) + " existence";
        if (!v) return std::nullopt;
        const auto& p = v->prefix;
        const auto& f = v->factor;
        if (p.empty() || p.size() != f.size() || p != w.prefix(p.size()) || f != w.factor(v->factor_start, f.size()) ||
            f.ones() <= p.ones() || p[p.size() - 1] != 0 || f[0] != 1 ||
            p.prefix(p.size() - 1).ones() != f.suffix(f.size() - 1).ones())
            return quoted(w);
        return std::nullopt;
    });
    run.claim("zero-prefix-normal", words.size(), [&](std::size_t i) -> Failure {
        if (is_k_prefix_normal(words[i], 0) != is_prefix_normal(words[i])) return quoted(words[i]);
        return std::nullopt;
    });
}

void equivalence_suite(ClaimRunner& run, std::size_t bound) {
    for (std::size_t n = 0; n <= bound; ++n) {
        const auto words = all_words(n);
        std::vector<LeafFunction> lfs(words.size());
        std::vector<std::vector<std::size_t>> profiles(words.size());
        for (std::size_t i = 0; i < words.size(); ++i) {
            lfs[i] = oracle_of(rc(words[i]));
            profiles[i] = f1_profile(words[i]);
        }
        run.claim("leaf-equivalence-iff-f1 n=" + std::to_string(n), words.size(), [&](std::size_t i) -> Failure {
            for (std::size_t j = i + 1; j < words.size(); ++j)
                if ((lfs[i] == lfs[j]) != (profiles[i] == profiles[j]) ||
                    leaf_equivalent(words[i], words[j]) != equivalent(words[i], words[j]))
                    return quoted(words[i]) + " " + quoted(words[j]);
            return std::nullopt;
        });

        std::map<std::vector<std::size_t>, std::vector<std::size_t>> classes;
        for (std::size_t i = 0; i < words.size(); ++i) classes[profiles[i]].push_back(i);
        std::vector<std::vector<std::size_t>> members;
        for (auto& [profile, idx] : classes) members.push_back(std::move(idx));
        run.claim("unique-prefix-normal-form n=" + std::to_string(n), members.size(), [&](std::size_t c) -> Failure {
            std::size_t normal = 0;
            std::optional<BinaryWord> rep;
            for (auto i : members[c]) {
                if (is_prefix_normal(words[i])) {
                    ++normal;
                    rep = words[i];
                }
            }
            if (normal != 1) return "class of " + quoted(words[members[c][0]]) + " has " + std::to_string(normal);
            for (auto i : members[c])
                if (pnf(words[i]) != *rep) return quoted(words[i]);
            return std::nullopt;
        });
    }

    const auto words = words_up_to(bound);
    run.claim("factor-subsequence", words.size(), [&](std::size_t idx) -> Failure {
        const auto& w = words[idx];
        const auto r = rc(w);
        for (std::size_t start = 0; start <= w.size(); ++start)
            for (std::size_t len = 0; start + len <= w.size(); ++len) {
                const auto u = w.factor(start, len);
                const auto ru = rc(u);
                if (!is_subsequence(ru, r) || ru.size() != u.size() + 3 || ru.leaves() != u.ones() + 2)
                    return quoted(w) + " factor " + quoted(u);
            }
        return std::nullopt;
    });
    run.claim("fully-leafed-nested-cuts", words.size(), [&](std::size_t idx) -> Failure {
        const auto& w = words[idx];
        const auto r = rc(w);
        const auto lf = oracle_of(r);
        const std::size_t n = r.size();
        for (std::size_t i = 3; i <= n; ++i) {
            const auto target = lf[i];
            bool left_of_right = false, right_of_left = false;
            for (std::size_t j = i; j <= n; ++j) {
                left_of_right |= LeafValue::finite(static_cast<std::uint32_t>(left(right(r, j), i).leaves())) == target;
                right_of_left |= LeafValue::finite(static_cast<std::uint32_t>(right(left(r, j), i).leaves())) == target;
            }
            if (!left_of_right || !right_of_left) return quoted(w) + " i=" + std::to_string(i);
        }
        return std::nullopt;
    });
}

std::string describe_tree(const Graph& t, const BinaryWord& w) {
    std::string out = "n=" + std::to_string(t.order()) + " leaf-word=" + w.str() + " edges=";
    for (std::size_t i = 0; i < t.edges().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t.edges()[i].u) + "-" + std::to_string(t.edges()[i].v);
    }
    return out;
}

void trees_suite(ClaimRunner& run, std::size_t bound) {
    std::vector<Graph> trees;
    for (std::size_t n = 3; n <= bound; ++n) {
        auto level = enumerate_free_trees(n);
        trees.insert(trees.end(), level.begin(), level.end());
    }
    std::vector<LeafFunction> lfs(trees.size());
    const auto count = static_cast<long long>(trees.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < count; ++i)
        lfs[static_cast<std::size_t>(i)] = leaf_function_bruteforce(trees[static_cast<std::size_t>(i)],
                                                                    {kMaxOracleVertices, Execution::sequential});

    run.claim("tree-leaf-word-prefix-normal", trees.size(), [&](std::size_t i) -> Failure {
        const auto w = as_binary(delta_leaf_word(lfs[i]));
        if (!w) return describe_tree(trees[i], BinaryWord{}) + " (non-binary)";
        if (!is_prefix_normal(*w)) return describe_tree(trees[i], *w);
        return std::nullopt;
    });
    run.claim("tree-leaf-function-non-decreasing", trees.size(), [&](std::size_t i) -> Failure {
        if (!lfs[i].is_non_decreasing()) return "n=" + std::to_string(trees[i].order()) + " " + to_csv(lfs[i]);
        return std::nullopt;
    });
    run.claim("fk-family k=1..3", 3, [&](std::size_t idx) -> Failure {
        const std::size_t k = idx + 1;
        const auto g = fk_tree(k);
        const auto lf = leaf_function_pruned(g);
        const auto w = as_binary(delta_leaf_word(lf));
        std::string expected;
        auto rep = [&expected](char c, std::size_t times) { expected.append(times, c); };
        rep('1', k + 1), rep('0', k), rep('1', 1), rep('0', k), rep('1', k + 1), rep('0', k), rep('1', k + 1);
        if (!w || w->str() != expected) return "k=" + std::to_string(k) + " leaf word " + (w ? w->str() : "?");
        if (!is_k_prefix_normal(*w, k) || is_k_prefix_normal(*w, k - 1)) return "k=" + std::to_string(k) + " normality";
        return std::nullopt;
    });
}

}  // namespace

std::string_view to_string(Suite s) {
    switch (s) {
        case Suite::poset: return "poset";
        case Suite::morphism: return "morphism";
        case Suite::theorem53: return "theorem53";
        case Suite::theorem61: return "theorem61";
        case Suite::trees: return "trees";
    }
    return "?";
}

Suite parse_suite(std::string_view name) {
    for (auto s : kAllSuites)
        if (to_string(s) == name) return s;
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::size_t default_bound(Suite s) {
    switch (s) {
        case Suite::poset: return 7;
        case Suite::morphism: return 8;
        case Suite::theorem53: return 10;
        case Suite::theorem61: return 8;
        case Suite::trees: return 12;
    }
    return 0;
}

std::size_t max_bound(Suite s) {
    switch (s) {
        case Suite::poset: return 10;
        case Suite::morphism: return 10;
        case Suite::theorem53: return 14;
        case Suite::theorem61: return 10;
        case Suite::trees: return 14;
    }
    return 0;
}

std::vector<VerifyReport> run_suite(Suite s, std::optional<std::size_t> bound, Execution exec) {
    const std::size_t b = bound.value_or(default_bound(s));
    if (b > max_bound(s))
        throw std::invalid_argument("bound " + std::to_string(b) + " exceeds the limit " +
                                    std::to_string(max_bound(s)) + " of suite " + std::string(to_string(s)));
    std::vector<VerifyReport> out;
    ClaimRunner run(s, b, exec, out);
    switch (s) {
        case Suite::poset: poset_suite(run, b); break;
        case Suite::morphism: morphism_suite(run, b); break;
        case Suite::theorem53: round_trip_suite(run, b); break;
        case Suite::theorem61: equivalence_suite(run, b); break;
        case Suite::trees: trees_suite(run, b); break;
    }
    return out;
}

std::string to_json(const VerifyReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["claim"] = r.claim;
    j["bound"] = r.bound;
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    j["seconds"] = r.seconds;
    j["passed"] = r.passed();
    return j.dump();
}

}  // namespace leafword
