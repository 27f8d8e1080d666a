// words.hpp - F_1 profiles, prefix normality and the reading caterpillar.
#pragma once

#include "leafword/binary_word.hpp"
#include "leafword/caterpillar.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace leafword {

// Maximum number of 1s over the length-i factors of w. Throws
// std::out_of_range for i > |w|.
std::size_t f1(const BinaryWord& w, std::size_t i);

// F(0..|w|) with F(i) = f1(w, i).
std::vector<std::size_t> f1_profile(const BinaryWord& w);

// P(0..|w|) with P(i) = |pref_i(w)|_1.
std::vector<std::size_t> prefix_ones(const BinaryWord& w);

bool is_prefix_normal(const BinaryWord& w);

// max_i (F_1(w, i) - |pref_i(w)|_1); zero exactly for prefix normal words.
std::size_t prefix_normality_deficit(const BinaryWord& w);

// Every factor has at most k more 1s than the prefix of equal length.
bool is_k_prefix_normal(const BinaryWord& w, std::size_t k);

// Shortest prefix p of w beaten by an equal-length factor f, with f the
// leftmost such factor. Writing p = u0 and f = 1u', u and u' have the same
// number of 1s.
struct PrefixNormalViolation {
    BinaryWord prefix;
    BinaryWord factor;
    std::size_t factor_start;
};

std::optional<PrefixNormalViolation> find_prefix_normal_violation(const BinaryWord& w);

// The prefix normal word with the same F_1 profile as w.
BinaryWord pnf(const BinaryWord& w);

// Same length and same F_1 profile.
bool equivalent(const BinaryWord& a, const BinaryWord& b);

// Reading caterpillar: rc(ε) = (2), rc(u0) = rc(u) ⋄ (1,1), rc(u1) = rc(u) ⋄ (3).
CaterpillarSequence rc(const BinaryWord& w);

// Prefix normal words of length n in lexicographic order. n <= 22.
std::vector<BinaryWord> enumerate_pnw(std::size_t n);
void for_each_pnw(std::size_t n, const std::function<void(const BinaryWord&)>& visit);

}  // namespace leafword
