// leaf_words.hpp - leaf words (discrete derivatives of leaf functions) and
// the caterpillar realization decision.
//
// The leaf word of an n-vertex graph has letters L(i+3) - L(i+2) for
// i = 1..n-3, with ω wherever either value is -inf. Trees have binary leaf
// words; a leaf function starting (0,0,2,2) is the leaf function of a
// caterpillar exactly when its leaf word is prefix normal, and the reading
// caterpillar of that word realizes it.
#pragma once

#include "leafword/binary_word.hpp"
#include "leafword/caterpillar.hpp"
#include "leafword/leaf_function.hpp"
#include "leafword/words.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace leafword {

// An integer or ω.
class LeafLetter {
public:
    static constexpr LeafLetter omega() { return LeafLetter{}; }
    static constexpr LeafLetter of(long v) { return LeafLetter{v}; }

    constexpr bool is_omega() const { return !value_.has_value(); }
    constexpr long value() const { return value_.value(); }

    // "w" for ω.
    std::string str() const;

    auto operator<=>(const LeafLetter&) const = default;

private:
    constexpr LeafLetter() = default;
    constexpr explicit LeafLetter(long v) : value_(v) {}

    std::optional<long> value_;
};

using LeafWord = std::vector<LeafLetter>;

// Throws std::invalid_argument when lf.n() < 3 or lf violates the leaf
// function invariants.
LeafWord delta_leaf_word(const LeafFunction& lf);

// The tree-shaped leaf function on |w|+3 vertices whose leaf word is w:
// (0, 0, 2, 2, 2 + |pref_1(w)|_1, ..., 2 + |w|_1).
LeafFunction leaf_function_from_word(const BinaryWord& w);

enum class LeafWordClass { tree_compatible, non_tree, invalid };

std::string_view to_string(LeafWordClass c);

// tree_compatible: letters in {0,1}. invalid: a letter > 1, or ω followed by
// a non-ω letter. non_tree: everything else.
LeafWordClass classify_leaf_word(const LeafWord& lw);

LeafWord to_leaf_word(const BinaryWord& w);
// nullopt unless every letter is 0 or 1.
std::optional<BinaryWord> as_binary(const LeafWord& lw);

// Comma-separated letters, ω as "w": "1,1,1,-3,0,0,w,w". Binary words are
// written compactly ("110101") when compact_binary is set.
std::string format_leaf_word(const LeafWord& lw, bool compact_binary = true);
// Accepts either form; the empty string is the empty word.
LeafWord parse_leaf_word(std::string_view text);

struct Rejection {
    enum class Reason { too_small, bad_prefix, bad_alphabet, not_prefix_normal };

    Reason reason;
    std::string message;
    // Set for not_prefix_normal.
    std::optional<PrefixNormalViolation> witness;
};

std::string_view to_string(Rejection::Reason r);

using Realization = std::variant<CaterpillarSequence, Rejection>;

// A caterpillar whose leaf function is lf, or the first failed condition:
// n >= 3, values start (0,0,2,2), leaf word binary, leaf word prefix normal.
Realization realize_caterpillar(const LeafFunction& lf);

// Leaf functions of rc(a) and rc(b) coincide.
bool leaf_equivalent(const BinaryWord& a, const BinaryWord& b);

}  // namespace leafword
