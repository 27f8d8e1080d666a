#include "leafword/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace leafword {

std::size_t f1(const BinaryWord& w, std::size_t i) {
    if (i > w.size()) throw std::out_of_range("f1: window longer than word");
    std::size_t window = 0;
    for (std::size_t j = 0; j < i; ++j) window += w[j];
    std::size_t best = window;
    for (std::size_t j = i; j < w.size(); ++j) {
        window += w[j];
        window -= w[j - i];
        best = std::max(best, window);
    }
    return best;
}

std::vector<std::size_t> f1_profile(const BinaryWord& w) {
    std::vector<std::size_t> profile(w.size() + 1);
    for (std::size_t i = 0; i <= w.size(); ++i) profile[i] = f1(w, i);
    return profile;
}

std::vector<std::size_t> prefix_ones(const BinaryWord& w) {
    std::vector<std::size_t> p(w.size() + 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i) p[i + 1] = p[i] + w[i];
    return p;
}

std::size_t prefix_normality_deficit(const BinaryWord& w) {
    const auto profile = f1_profile(w);
    const auto pref = prefix_ones(w);
    std::size_t deficit = 0;
    for (std::size_t i = 0; i <= w.size(); ++i) deficit = std::max(deficit, profile[i] - pref[i]);
    return deficit;
}

bool is_prefix_normal(const BinaryWord& w) {
    return prefix_normality_deficit(w) == 0;
}

bool is_k_prefix_normal(const BinaryWord& w, std::size_t k) {
    return prefix_normality_deficit(w) <= k;
}

std::optional<PrefixNormalViolation> find_prefix_normal_violation(const BinaryWord& w) {
    const auto pref = prefix_ones(w);
    for (std::size_t len = 1; len <= w.size(); ++len) {
        for (std::size_t start = 1; start + len <= w.size(); ++start) {
            if (pref[start + len] - pref[start] > pref[len])
                return PrefixNormalViolation{w.prefix(len), w.factor(start, len), start};
        }
    }
    return std::nullopt;
}

BinaryWord pnf(const BinaryWord& w) {
    const auto profile = f1_profile(w);
    std::vector<std::uint8_t> letters(w.size());
    for (std::size_t i = 1; i <= w.size(); ++i) letters[i - 1] = static_cast<std::uint8_t>(profile[i] - profile[i - 1]);
    return BinaryWord(std::move(letters));
}

bool equivalent(const BinaryWord& a, const BinaryWord& b) {
    return a.size() == b.size() && f1_profile(a) == f1_profile(b);
}

CaterpillarSequence rc(const BinaryWord& w) {
    std::vector<std::uint32_t> s{2};
    for (auto letter : w.letters()) {
        if (letter == 0) {
            s.back() -= 1;
            s.push_back(1);
        } else {
            s.back() += 1;
        }
    }
    return CaterpillarSequence(std::move(s));
}

namespace {

// Depth-first over prefixes; every prefix of a prefix normal word is prefix
// normal, so only the windows ending at the new letter need checking.
void extend_pnw(std::vector<std::uint8_t>& letters, std::vector<std::size_t>& pref, std::size_t n,
                const std::function<void(const BinaryWord&)>& visit) {
    const std::size_t m = letters.size();
    if (m == n) {
        visit(BinaryWord(letters));
        return;
    }
    for (std::uint8_t a : {std::uint8_t{0}, std::uint8_t{1}}) {
        letters.push_back(a);
        pref.push_back(pref.back() + a);
        bool ok = true;
        for (std::size_t len = 1; len <= m + 1 && ok; ++len) ok = pref[m + 1] - pref[m + 1 - len] <= pref[len];
        if (ok) extend_pnw(letters, pref, n, visit);
        letters.pop_back();
        pref.pop_back();
    }
}

}  // namespace

void for_each_pnw(std::size_t n, const std::function<void(const BinaryWord&)>& visit) {
    if (n > 22) throw std::invalid_argument("enumerate_pnw: length must be <= 22");
    std::vector<std::uint8_t> letters;
    std::vector<std::size_t> pref{0};
    letters.reserve(n);
    pref.reserve(n + 1);
    extend_pnw(letters, pref, n, visit);
}

std::vector<BinaryWord> enumerate_pnw(std::size_t n) {
    std::vector<BinaryWord> out;
    for_each_pnw(n, [&out](const BinaryWord& w) { out.push_back(w); });
    return out;
}

}  // namespace leafword
