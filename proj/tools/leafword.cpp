// leafword - command line front end.
//
// Exit status: 0 on success or a true answer, 1 on a false answer or a
// rejected input, 2 on usage errors (bad flags, unparsable values, bounds).

#include "leafword/caterpillar.hpp"
#include "leafword/graph.hpp"
#include "leafword/leaf_function.hpp"
#include "leafword/leaf_words.hpp"
#include "leafword/subtree_oracle.hpp"
#include "leafword/verify.hpp"
#include "leafword/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <variant>

using namespace leafword;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool g_json = false;

json seq_json(const CaterpillarSequence& s) {
    return json(s.entries());
}

json violation_json(const PrefixNormalViolation& v) {
    return {{"prefix", v.prefix.str()}, {"factor", v.factor.str()}, {"factor_start", v.factor_start}};
}

// A word argument, or epsilon when --empty is given and the argument is absent.
BinaryWord word_arg(const std::string& text, bool empty) {
    if (empty && text.empty()) return BinaryWord{};
    if (text.empty()) throw UsageError("missing word (use --empty for the empty word)");
    return BinaryWord::parse(text);
}

Graph family_graph(const std::string& family, const std::string& param) {
    if (family == "caterpillar") return caterpillar_graph(CaterpillarSequence::parse(param));
    std::size_t p = 0;
    try {
        std::size_t used = 0;
        p = std::stoul(param, &used);
        if (used != param.size()) throw std::invalid_argument(param);
    } catch (const std::logic_error&) {
        throw UsageError("--param must be a non-negative integer for family " + family);
    }
    if (family == "wheel") return wheel(p);
    if (family == "star") return star(p);
    if (family == "chain") return chain(p);
    if (family == "fk") return fk_tree(p);
    throw UsageError("unknown family '" + family + "'");
}

// Shared graph/caterpillar input of leaf-function and leaf-word.
struct GraphInput {
    std::string file;
    std::string caterpillar;
    std::string family;
    std::string param;
    std::string method = "auto";
    std::size_t max_vertices = 20;

    void add_to(CLI::App* cmd) {
        cmd->add_option("graph-file", file, "edge list file ('-' for stdin)");
        cmd->add_option("--caterpillar", caterpillar, "caterpillar sequence, e.g. 3,1,2");
        cmd->add_option("--family", family, "generated graph family")
            ->check(CLI::IsMember({"wheel", "star", "chain", "fk", "caterpillar"}));
        cmd->add_option("--param", param, "family parameter");
        cmd->add_option("--method", method, "auto, fast, brute or pruned")
            ->check(CLI::IsMember({"auto", "fast", "brute", "pruned"}));
        cmd->add_option("--max-vertices", max_vertices, "vertex bound for the brute-force oracle")
            ->check(CLI::Range(std::size_t{1}, kMaxOracleVertices));
    }

    LeafFunction leaf_function() const {
        const int sources = !file.empty() + !caterpillar.empty() + !family.empty();
        if (sources != 1) throw UsageError("give exactly one of graph-file, --caterpillar, --family");
        if (!family.empty() && param.empty()) throw UsageError("--family needs --param");

        if (!caterpillar.empty()) {
            const auto s = CaterpillarSequence::parse(caterpillar);
            if (method == "auto" || method == "fast") return leaf_function_caterpillar(s);
            return run_oracle(caterpillar_graph(s));
        }
        if (method == "fast") throw UsageError("--method fast needs --caterpillar");
        if (!family.empty()) return run_oracle(family_graph(family, param));
        if (file == "-") return run_oracle(read_edge_list(std::cin));
        std::ifstream in(file);
        if (!in) throw UsageError("cannot open " + file);
        return run_oracle(read_edge_list(in));
    }

private:
    LeafFunction run_oracle(const Graph& g) const {
        if (method == "pruned" || (method == "auto" && g.order() > max_vertices))
            return leaf_function_pruned(g);
        return leaf_function_bruteforce(g, {max_vertices, Execution::parallel});
    }
};

int cmd_leaf_function(const GraphInput& in, bool csv) {
    const auto lf = in.leaf_function();
    if (g_json) std::cout << to_json(lf) << '\n';
    else if (csv) std::cout << to_csv(lf) << '\n';
    else
        for (std::size_t i = 0; i < lf.values().size(); ++i) std::cout << i << " → " << lf[i].str() << '\n';
    return 0;
}

int cmd_leaf_word(const GraphInput& in, const std::string& values, const std::string& word) {
    LeafWord lw;
    if (!word.empty()) lw = parse_leaf_word(word);
    else if (!values.empty()) lw = delta_leaf_word(parse_leaf_values(values));
    else lw = delta_leaf_word(in.leaf_function());
    const auto cls = classify_leaf_word(lw);
    if (g_json) {
        json letters = json::array();
        for (const auto& l : lw) letters.push_back(l.is_omega() ? json("w") : json(l.value()));
        std::cout << json{{"leaf_word", format_leaf_word(lw)}, {"letters", letters}, {"class", to_string(cls)}}.dump()
                  << '\n';
    } else {
        std::cout << format_leaf_word(lw) << '\n' << to_string(cls) << '\n';
    }
    return cls == LeafWordClass::invalid ? 1 : 0;
}

int cmd_rc(const BinaryWord& w) {
    const auto s = rc(w);
    if (g_json) std::cout << json{{"word", w.str()}, {"sequence", seq_json(s)}}.dump() << '\n';
    else std::cout << s.str() << '\n';
    return 0;
}

int cmd_word_of(const std::string& text) {
    const auto s = CaterpillarSequence::parse(text);
    const auto w = word_of(s);
    if (g_json) std::cout << json{{"sequence", seq_json(s)}, {"word", w.str()}}.dump() << '\n';
    else std::cout << w.str() << '\n';
    return 0;
}

int cmd_pnf(const BinaryWord& w) {
    const auto p = pnf(w);
    if (g_json) std::cout << json{{"word", w.str()}, {"pnf", p.str()}, {"profile", f1_profile(w)}}.dump() << '\n';
    else std::cout << p.str() << '\n';
    return 0;
}

int cmd_check_pn(const BinaryWord& w, std::size_t k) {
    const auto deficit = prefix_normality_deficit(w);
    const bool ok = deficit <= k;
    const auto v = find_prefix_normal_violation(w);
    if (g_json) {
        json j{{"word", w.str()}, {"k", k}, {"deficit", deficit}, {"holds", ok}};
        j["witness"] = v ? violation_json(*v) : json(nullptr);
        std::cout << j.dump() << '\n';
        return ok ? 0 : 1;
    }
    const std::string what = k == 0 ? "prefix normal" : std::to_string(k) + "-prefix normal";
    std::cout << w.str() << (ok ? " is " : " is not ") << what;
    if (v)
        std::cout << "; witness prefix " << v->prefix.str() << " (" << v->prefix.ones() << " ones) vs factor "
                  << v->factor.str() << " at " << v->factor_start << " (" << v->factor.ones() << " ones)"
                  << ", deficit " << deficit;
    std::cout << '\n';
    return ok ? 0 : 1;
}

int cmd_realize(const LeafFunction& lf) {
    const auto result = realize_caterpillar(lf);
    if (const auto* s = std::get_if<CaterpillarSequence>(&result)) {
        if (g_json) std::cout << json{{"realized", true}, {"sequence", seq_json(*s)}}.dump() << '\n';
        else std::cout << s->str() << '\n';
        return 0;
    }
    const auto& r = std::get<Rejection>(result);
    if (g_json) {
        json j{{"realized", false}, {"reason", to_string(r.reason)}, {"message", r.message}};
        j["witness"] = r.witness ? violation_json(*r.witness) : json(nullptr);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "rejected (" << to_string(r.reason) << "): " << r.message << '\n';
        if (r.witness) std::cout << "witness " << r.witness->prefix.str() << ' ' << r.witness->factor.str() << '\n';
    }
    return 1;
}

int cmd_poset(std::size_t max_size, bool dot) {
    const auto covers = hasse_covers(max_size);
    if (dot) {
        std::cout << hasse_to_dot(covers);
        return 0;
    }
    if (g_json) {
        json arr = json::array();
        for (const auto& c : covers) arr.push_back({seq_json(c.lower), seq_json(c.upper)});
        std::cout << json{{"max_size", max_size}, {"covers", arr}}.dump() << '\n';
    } else {
        for (const auto& c : covers) std::cout << c.lower.str() << " < " << c.upper.str() << '\n';
    }
    return 0;
}

int cmd_generate(const std::string& family, const std::string& param, bool dot) {
    const auto g = family_graph(family, param);
    if (dot) std::cout << to_dot(g);
    else if (g_json) {
        json edges = json::array();
        for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
        std::cout << json{{"n", g.order()}, {"edges", edges}}.dump() << '\n';
    } else {
        write_edge_list(std::cout, g);
    }
    return 0;
}

int cmd_equiv(const BinaryWord& a, const BinaryWord& b) {
    const bool same_profile = equivalent(a, b);
    const bool same_leaves = leaf_equivalent(a, b);
    if (g_json)
        std::cout << json{{"left", a.str()}, {"right", b.str()}, {"equivalent", same_profile},
                          {"leaf_equivalent", same_leaves}}
                         .dump()
                  << '\n';
    else
        std::cout << (same_profile ? "equivalent" : "not equivalent") << '\n'
                  << (same_leaves ? "leaf-equivalent" : "not leaf-equivalent") << '\n';
    return same_profile && same_leaves ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::optional<std::size_t> max_n, bool sequential) {
    std::vector<Suite> suites;
    if (suite == "all") suites.assign(std::begin(kAllSuites), std::end(kAllSuites));
    else suites.push_back(parse_suite(suite));
    for (auto s : suites)
        if (max_n && *max_n > max_bound(s))
            throw UsageError("--max-n " + std::to_string(*max_n) + " exceeds the limit " +
                             std::to_string(max_bound(s)) + " of suite " + std::string(to_string(s)));

    const auto exec = sequential ? Execution::sequential : Execution::parallel;
    bool all_passed = true;
    for (auto s : suites) {
        for (const auto& r : run_suite(s, max_n, exec)) {
            all_passed &= r.passed();
            if (g_json) {
                std::cout << to_json(r) << '\n';
                continue;
            }
            std::printf("%s %-10s %-40s bound=%zu checked=%zu failures=%zu %.3fs\n", r.passed() ? "PASS" : "FAIL",
                        r.suite.c_str(), r.claim.c_str(), r.bound, r.checked, r.failures.size(), r.seconds);
            for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
        }
    }
    std::fflush(stdout);
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Leaf functions, leaf words and caterpillars"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "machine-readable JSON output");

    GraphInput lf_in;
    bool csv = false;
    auto* lf_cmd = app.add_subcommand("leaf-function", "leaf function L(0..n+1) of a graph or caterpillar");
    lf_in.add_to(lf_cmd);
    lf_cmd->add_flag("--csv", csv, "print values as one comma separated line");

    GraphInput lw_in;
    std::string lw_values, lw_word;
    auto* lw_cmd = app.add_subcommand("leaf-word", "leaf word of a graph, caterpillar or leaf function, and its class");
    lw_in.add_to(lw_cmd);
    lw_cmd->add_option("--values", lw_values, "leaf function values, e.g. 0,0,2,2,3");
    lw_cmd->add_option("--word", lw_word, "classify this leaf word, e.g. 1,1,1,-3,0,0,w,w");

    std::string word1, word2;
    bool empty = false;
    auto add_word = [&](CLI::App* cmd, std::string& target, const char* name) {
        cmd->add_option(name, target, "binary word");
        cmd->add_flag("--empty", empty, "use the empty word");
    };

    auto* rc_cmd = app.add_subcommand("rc", "reading caterpillar of a word");
    add_word(rc_cmd, word1, "word");

    std::string seq_text;
    auto* wo_cmd = app.add_subcommand("word-of", "word whose reading caterpillar is the sequence");
    wo_cmd->add_option("sequence", seq_text, "caterpillar sequence")->required();

    auto* pnf_cmd = app.add_subcommand("pnf", "prefix normal form");
    add_word(pnf_cmd, word1, "word");

    std::size_t k = 0;
    auto* pn_cmd = app.add_subcommand("check-pn", "test (k-)prefix normality");
    add_word(pn_cmd, word1, "word");
    pn_cmd->add_option("--k", k, "allowed deficit");

    std::string values, from_word;
    bool from_empty = false;
    auto* re_cmd = app.add_subcommand("realize", "caterpillar realizing a leaf function");
    re_cmd->add_option("values", values, "leaf function values, e.g. 0,0,2,2,3,4,4,5,5,6");
    re_cmd->add_option("--from-word", from_word, "use the leaf function induced by this binary leaf word");
    re_cmd->add_flag("--empty", from_empty, "use the leaf function induced by the empty leaf word");

    std::size_t max_size = 7;
    bool dot = false;
    auto* po_cmd = app.add_subcommand("poset", "Hasse diagram of the caterpillar subsequence order");
    po_cmd->add_option("--max-size", max_size, "largest caterpillar size")->check(CLI::Range(3, 12));
    po_cmd->add_flag("--dot", dot, "Graphviz output");

    std::string family, param;
    bool gen_dot = false;
    auto* gen_cmd = app.add_subcommand("generate", "write a graph as an edge list");
    gen_cmd->add_option("--family", family, "wheel, star, chain, fk or caterpillar")
        ->required()
        ->check(CLI::IsMember({"wheel", "star", "chain", "fk", "caterpillar"}));
    gen_cmd->add_option("--param", param, "size parameter, or the sequence for caterpillar")->required();
    gen_cmd->add_flag("--dot", gen_dot, "Graphviz output");

    auto* eq_cmd = app.add_subcommand("equiv", "F1 and leaf equivalence of two words");
    eq_cmd->add_option("left", word1, "binary word");
    eq_cmd->add_option("right", word2, "binary word");
    eq_cmd->add_flag("--empty", empty, "missing words are empty");

    std::string suite = "all";
    std::optional<std::size_t> max_n;
    bool sequential = false;
    auto* ve_cmd = app.add_subcommand("verify", "exhaustive property sweeps");
    ve_cmd->add_option("--suite", suite, "all, poset, morphism, theorem53, theorem61 or trees")
        ->check(CLI::IsMember({"all", "poset", "morphism", "theorem53", "theorem61", "trees"}));
    ve_cmd->add_option("--max-n", max_n, "size bound");
    ve_cmd->add_flag("--sequential", sequential, "single-threaded sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*lf_cmd) return cmd_leaf_function(lf_in, csv);
        if (*lw_cmd) return cmd_leaf_word(lw_in, lw_values, lw_word);
        if (*rc_cmd) return cmd_rc(word_arg(word1, empty));
        if (*wo_cmd) return cmd_word_of(seq_text);
        if (*pnf_cmd) return cmd_pnf(word_arg(word1, empty));
        if (*pn_cmd) return cmd_check_pn(word_arg(word1, empty), k);
        if (*re_cmd) {
            if (!values.empty() + !from_word.empty() + from_empty != 1)
                throw UsageError("give exactly one of values, --from-word, --empty");
            const auto lf = values.empty() ? leaf_function_from_word(word_arg(from_word, from_empty))
                                           : parse_leaf_values(values);
            return cmd_realize(lf);
        }
        if (*po_cmd) return cmd_poset(max_size, dot);
        if (*gen_cmd) return cmd_generate(family, param, gen_dot);
        if (*eq_cmd) return cmd_equiv(word_arg(word1, empty), word_arg(word2, empty));
        if (*ve_cmd) return cmd_verify(suite, max_n, sequential);
    } catch (const std::exception& e) {
        std::cerr << "leafword: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
