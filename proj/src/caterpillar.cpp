#include "leafword/caterpillar.hpp"

#include "leafword/words.hpp"
#include "text.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace leafword {

CaterpillarSequence::CaterpillarSequence(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("caterpillar sequence must be non-empty");
    if (entries_.front() < 1 || entries_.back() < 1)
        throw std::invalid_argument("caterpillar sequence must start and end with a positive entry");
    if (entries_.size() == 1 && entries_.front() < 2)
        throw std::invalid_argument("single-entry caterpillar sequence must be at least 2");
}

CaterpillarSequence CaterpillarSequence::parse(std::string_view text) {
    std::vector<std::uint32_t> entries;
    for (auto field : detail::split_csv(text)) entries.push_back(static_cast<std::uint32_t>(detail::parse_natural(field)));
    return CaterpillarSequence(std::move(entries));
}

std::size_t CaterpillarSequence::size() const {
    return length() + leaves();
}

std::size_t CaterpillarSequence::leaves() const {
    return std::accumulate(entries_.begin(), entries_.end(), std::size_t{0});
}

CaterpillarSequence CaterpillarSequence::reversed() const {
    return CaterpillarSequence(std::vector<std::uint32_t>(entries_.rbegin(), entries_.rend()));
}

std::string CaterpillarSequence::str() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

std::vector<std::uint32_t> spine_degrees(const CaterpillarSequence& s) {
    std::vector<std::uint32_t> d(s.entries());
    if (d.size() == 1) return d;
    for (auto& x : d) x += 2;
    d.front() -= 1;
    d.back() -= 1;
    return d;
}

bool is_subsequence(const CaterpillarSequence& sub, const CaterpillarSequence& super) {
    if (sub.length() > super.length()) return false;
    const auto small = spine_degrees(sub);
    const auto big = spine_degrees(super);
    for (std::size_t shift = 0; shift + small.size() <= big.size(); ++shift) {
        bool fits = true;
        for (std::size_t j = 0; j < small.size() && fits; ++j) fits = small[j] <= big[j + shift];
        if (fits) return true;
    }
    return false;
}

CaterpillarSequence graft(const CaterpillarSequence& s, const CaterpillarSequence& t) {
    std::vector<std::uint32_t> out(s.entries().begin(), s.entries().end() - 1);
    out.push_back(s.entries().back() + t[0] - 2);
    out.insert(out.end(), t.entries().begin() + 1, t.entries().end());
    return CaterpillarSequence(std::move(out));
}

namespace {

void check_cut_size(const CaterpillarSequence& s, std::size_t i) {
    if (i < 3 || i > s.size())
        throw std::out_of_range("cut size " + std::to_string(i) + " outside [3, " + std::to_string(s.size()) + "]");
}

}  // namespace

LeftCut alpha_beta_left(const CaterpillarSequence& s, std::size_t i) {
    check_cut_size(s, i);
    // i lies in [P_a + 2, P_a + s_{a+1} + 2] for exactly one a, where
    // P_a = sum_{m<=a} (s_m + 1).
    std::size_t consumed = 0;
    for (std::size_t a = 0; a < s.length(); ++a) {
        const std::size_t alpha = i - 1 - consumed;
        if (alpha <= std::size_t{s[a]} + 1) return {a, static_cast<std::uint32_t>(alpha)};
        consumed += s[a] + 1;
    }
    throw std::logic_error("alpha_beta_left: no cut found");
}

RightCut alpha_beta_right(const CaterpillarSequence& s, std::size_t i) {
    check_cut_size(s, i);
    const std::size_t k = s.length();
    std::size_t consumed = 0;
    for (std::size_t b = k + 1; b >= 2; --b) {
        const std::size_t beta = i - 1 - consumed;
        if (beta <= std::size_t{s[b - 2]} + 1) return {b, static_cast<std::uint32_t>(beta)};
        consumed += s[b - 2] + 1;
    }
    throw std::logic_error("alpha_beta_right: no cut found");
}

CaterpillarSequence left(const CaterpillarSequence& s, std::size_t i) {
    const auto cut = alpha_beta_left(s, i);
    std::vector<std::uint32_t> out(s.entries().begin(), s.entries().begin() + static_cast<std::ptrdiff_t>(cut.a));
    out.push_back(cut.alpha);
    return CaterpillarSequence(std::move(out));
}

CaterpillarSequence right(const CaterpillarSequence& s, std::size_t i) {
    const auto cut = alpha_beta_right(s, i);
    std::vector<std::uint32_t> out{cut.beta};
    out.insert(out.end(), s.entries().begin() + static_cast<std::ptrdiff_t>(cut.b - 1), s.entries().end());
    return CaterpillarSequence(std::move(out));
}

std::pair<CaterpillarSequence, CaterpillarSequence> decompose(const CaterpillarSequence& s, std::size_t i) {
    check_cut_size(s, i);
    return {left(s, i), right(s, s.size() + 3 - i)};
}

BinaryWord word_of(const CaterpillarSequence& s) {
    BinaryWord w;
    auto ones = [&w](std::size_t count) {
        for (std::size_t j = 0; j < count; ++j) w.push_back(1);
    };
    if (s.length() == 1) {
        ones(s[0] - 2);
        return w;
    }
    ones(s[0] - 1);
    for (std::size_t j = 1; j + 1 < s.length(); ++j) {
        w.push_back(0);
        ones(s[j]);
    }
    w.push_back(0);
    ones(s.entries().back() - 1);
    return w;
}

LeafFunction leaf_function_caterpillar(const CaterpillarSequence& s) {
    const auto profile = f1_profile(word_of(s));
    std::vector<LeafValue> values{LeafValue::finite(0), LeafValue::finite(0), LeafValue::finite(2)};
    for (std::size_t i = 3; i <= s.size(); ++i)
        values.push_back(LeafValue::finite(static_cast<std::uint32_t>(profile[i - 3] + 2)));
    return LeafFunction(std::move(values));
}

namespace {

void extend_sequences(std::vector<std::uint32_t>& prefix, std::size_t remaining,
                      std::vector<CaterpillarSequence>& out) {
    if (remaining == 0) {
        if (prefix.empty() || prefix.back() < 1) return;
        if (prefix.size() == 1 && prefix.front() < 2) return;
        out.emplace_back(prefix);
        return;
    }
    const std::uint32_t first = prefix.empty() ? 1u : 0u;
    for (std::uint32_t v = first; v + 1 <= remaining; ++v) {
        prefix.push_back(v);
        extend_sequences(prefix, remaining - 1 - v, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<CaterpillarSequence> all_caterpillar_sequences(std::size_t size) {
    if (size < 3) throw std::invalid_argument("caterpillar sequences have size >= 3");
    std::vector<CaterpillarSequence> out;
    std::vector<std::uint32_t> prefix;
    extend_sequences(prefix, size, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cover> hasse_covers(std::size_t max_size, Execution exec) {
    if (max_size > 12) throw std::invalid_argument("hasse_covers: max_size must be <= 12");
    std::vector<CaterpillarSequence> elems;
    for (std::size_t n = 3; n <= max_size; ++n) {
        auto level = all_caterpillar_sequences(n);
        elems.insert(elems.end(), level.begin(), level.end());
    }
    const std::size_t count = elems.size();
    const std::size_t words = (count + 63) / 64;
    // below[y] has bit x set iff elems[x] strictly precedes elems[y].
    std::vector<std::vector<std::uint64_t>> below(count, std::vector<std::uint64_t>(words, 0));
    const auto n_signed = static_cast<long long>(count);

#pragma omp parallel for schedule(dynamic, 8) if (exec == Execution::parallel)
    for (long long y = 0; y < n_signed; ++y)
        for (std::size_t x = 0; x < count; ++x)
            if (x != static_cast<std::size_t>(y) && is_subsequence(elems[x], elems[y]))
                below[y][x / 64] |= std::uint64_t{1} << (x % 64);

    std::vector<std::vector<Cover>> per_upper(count);
#pragma omp parallel for schedule(dynamic, 8) if (exec == Execution::parallel)
    for (long long y = 0; y < n_signed; ++y) {
        std::vector<std::uint64_t> reachable(words, 0);
        for (std::size_t z = 0; z < count; ++z)
            if (below[y][z / 64] >> (z % 64) & 1u)
                for (std::size_t w = 0; w < words; ++w) reachable[w] |= below[z][w];
        for (std::size_t x = 0; x < count; ++x) {
            const bool lower = below[y][x / 64] >> (x % 64) & 1u;
            const bool skipped = reachable[x / 64] >> (x % 64) & 1u;
            if (lower && !skipped) per_upper[y].push_back({elems[x], elems[y]});
        }
    }

    std::vector<Cover> covers;
    for (auto& part : per_upper) covers.insert(covers.end(), part.begin(), part.end());
    std::sort(covers.begin(), covers.end());
    return covers;
}

std::string hasse_to_dot(const std::vector<Cover>& covers) {
    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (const auto& c : covers) out += "  \"(" + c.lower.str() + ")\" -> \"(" + c.upper.str() + ")\";\n";
    out += "}\n";
    return out;
}

}  // namespace leafword
