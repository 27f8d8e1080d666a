// caterpillar.hpp - caterpillar sequences and their algebra.
//
// A caterpillar sequence (s_1, ..., s_k) lists how many pendant leaves hang
// off each vertex of the spine. Sequences form a monoid under graft with
// identity (2), partially ordered by the "caterpillar subsequence" relation
// (shifted domination of spine degrees). Left_i / Right_i peel a caterpillar
// down to i vertices from the right / left end.
#pragma once

#include "leafword/binary_word.hpp"
#include "leafword/execution.hpp"
#include "leafword/leaf_function.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace leafword {

class CaterpillarSequence {
public:
    // Throws std::invalid_argument unless k >= 1, s_1 >= 1, s_k >= 1 and
    // (k > 1 or s_1 >= 2).
    explicit CaterpillarSequence(std::vector<std::uint32_t> entries);
    CaterpillarSequence(std::initializer_list<std::uint32_t> entries)
        : CaterpillarSequence(std::vector<std::uint32_t>(entries)) {}

    // "3,0,2,4,0,1"
    static CaterpillarSequence parse(std::string_view text);

    // The identity of graft: the chain on three vertices.
    static CaterpillarSequence identity() { return CaterpillarSequence({2}); }

    // Spine length k.
    std::size_t length() const { return entries_.size(); }
    const std::vector<std::uint32_t>& entries() const { return entries_; }
    std::uint32_t operator[](std::size_t i) const { return entries_[i]; }

    // Number of vertices k + sum s_i.
    std::size_t size() const;
    // Number of leaves sum s_i.
    std::size_t leaves() const;

    CaterpillarSequence reversed() const;
    std::string str() const;

    auto operator<=>(const CaterpillarSequence&) const = default;

private:
    std::vector<std::uint32_t> entries_;
};

// Degrees of the spine vertices: (s_1) for k = 1, otherwise
// (s_1+1, s_2+2, ..., s_{k-1}+2, s_k+1).
std::vector<std::uint32_t> spine_degrees(const CaterpillarSequence& s);

// sub ⪯ super: some shift aligns spine_degrees(sub) under spine_degrees(super).
bool is_subsequence(const CaterpillarSequence& sub, const CaterpillarSequence& super);

// (s_1, ..., s_{k-1}, s_k + t_1 - 2, t_2, ..., t_l)
CaterpillarSequence graft(const CaterpillarSequence& s, const CaterpillarSequence& t);

// Closed form of Left_i: the unique (a, alpha) with
// Left_i(S) = (s_1, ..., s_a, alpha), 0 <= a <= k-1, 1 <= alpha <= s_{a+1}+1
// and i = sum_{m<=a} (s_m + 1) + alpha + 1.
struct LeftCut {
    std::size_t a;
    std::uint32_t alpha;
};

// Right_i(S) = (beta, s_b, ..., s_k) with 2 <= b <= k+1 (1-based, b = k+1
// meaning just (beta)), 1 <= beta <= s_{b-1}+1 and
// i = sum_{m>=b} (s_m + 1) + beta + 1.
struct RightCut {
    std::size_t b;
    std::uint32_t beta;
};

// All four throw std::out_of_range unless 3 <= i <= s.size().
LeftCut alpha_beta_left(const CaterpillarSequence& s, std::size_t i);
RightCut alpha_beta_right(const CaterpillarSequence& s, std::size_t i);
CaterpillarSequence left(const CaterpillarSequence& s, std::size_t i);
CaterpillarSequence right(const CaterpillarSequence& s, std::size_t i);

// (Left_i(S), Right_{|S|+3-i}(S)); their graft is S.
std::pair<CaterpillarSequence, CaterpillarSequence> decompose(const CaterpillarSequence& s, std::size_t i);

// The word w with rc(w) = s; |w| = |S| - 3.
BinaryWord word_of(const CaterpillarSequence& s);

// L_S via the F_1 profile of word_of(s): L(i) = F_1(w, i-3) + 2 for i >= 3.
LeafFunction leaf_function_caterpillar(const CaterpillarSequence& s);

// Every caterpillar sequence of exactly `size` vertices (size >= 3), in
// lexicographic order. There are 2^(size-3) of them.
std::vector<CaterpillarSequence> all_caterpillar_sequences(std::size_t size);

struct Cover {
    CaterpillarSequence lower;
    CaterpillarSequence upper;

    auto operator<=>(const Cover&) const = default;
};

// Cover relations of ⪯ among sequences of size 3..max_size, sorted. Both
// orientations of a caterpillar are distinct elements. max_size <= 12.
std::vector<Cover> hasse_covers(std::size_t max_size, Execution exec = Execution::parallel);

// Graphviz digraph with an edge lower -> upper per cover.
std::string hasse_to_dot(const std::vector<Cover>& covers);

}  // namespace leafword
