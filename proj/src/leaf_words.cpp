#include "leafword/leaf_words.hpp"

#include "text.hpp"

#include <stdexcept>

namespace leafword {

std::string LeafLetter::str() const {
    return is_omega() ? std::string("w") : std::to_string(*value_);
}

LeafWord delta_leaf_word(const LeafFunction& lf) {
    if (lf.n() < 3) throw std::invalid_argument("leaf words need at least 3 vertices");
    if (auto why = lf.invariant_violation()) throw std::invalid_argument("malformed leaf function: " + *why);
    LeafWord out;
    out.reserve(lf.n() - 3);
    for (std::size_t i = 1; i + 3 <= lf.n(); ++i) {
        const auto& hi = lf[i + 3];
        const auto& lo = lf[i + 2];
        if (!hi.is_finite() || !lo.is_finite()) out.push_back(LeafLetter::omega());
        else out.push_back(LeafLetter::of(static_cast<long>(hi.value()) - static_cast<long>(lo.value())));
    }
    return out;
}

LeafFunction leaf_function_from_word(const BinaryWord& w) {
    std::vector<LeafValue> values{LeafValue::finite(0), LeafValue::finite(0), LeafValue::finite(2),
                                  LeafValue::finite(2)};
    std::uint32_t current = 2;
    for (auto a : w.letters()) {
        current += a;
        values.push_back(LeafValue::finite(current));
    }
    return LeafFunction(std::move(values));
}

std::string_view to_string(LeafWordClass c) {
    switch (c) {
        case LeafWordClass::tree_compatible: return "tree-compatible";
        case LeafWordClass::non_tree: return "non-tree";
        case LeafWordClass::invalid: return "invalid";
    }
    return "?";
}

LeafWordClass classify_leaf_word(const LeafWord& lw) {
    bool binary = true;
    bool seen_omega = false;
    for (const auto& letter : lw) {
        if (letter.is_omega()) {
            seen_omega = true;
            binary = false;
            continue;
        }
        if (seen_omega || letter.value() > 1) return LeafWordClass::invalid;
        if (letter.value() < 0) binary = false;
    }
    return binary ? LeafWordClass::tree_compatible : LeafWordClass::non_tree;
}

LeafWord to_leaf_word(const BinaryWord& w) {
    LeafWord out;
    out.reserve(w.size());
    for (auto a : w.letters()) out.push_back(LeafLetter::of(a));
    return out;
}

std::optional<BinaryWord> as_binary(const LeafWord& lw) {
    std::vector<std::uint8_t> letters;
    letters.reserve(lw.size());
    for (const auto& letter : lw) {
        if (letter.is_omega() || letter.value() < 0 || letter.value() > 1) return std::nullopt;
        letters.push_back(static_cast<std::uint8_t>(letter.value()));
    }
    return BinaryWord(std::move(letters));
}

std::string format_leaf_word(const LeafWord& lw, bool compact_binary) {
    if (compact_binary)
        if (auto w = as_binary(lw)) return w->str();
    std::string out;
    for (std::size_t i = 0; i < lw.size(); ++i) {
        if (i) out += ',';
        out += lw[i].str();
    }
    return out;
}

LeafWord parse_leaf_word(std::string_view text) {
    text = detail::trim(text);
    LeafWord out;
    if (text.find(',') == std::string_view::npos && text.find_first_not_of("01") == std::string_view::npos) {
        for (char c : text) out.push_back(LeafLetter::of(c - '0'));
        return out;
    }
    for (auto field : detail::split_csv(text)) {
        if (field == "w" || field == "ω") out.push_back(LeafLetter::omega());
        else out.push_back(LeafLetter::of(static_cast<long>(detail::parse_integer(field))));
    }
    return out;
}

std::string_view to_string(Rejection::Reason r) {
    switch (r) {
        case Rejection::Reason::too_small: return "too-small";
        case Rejection::Reason::bad_prefix: return "bad-prefix";
        case Rejection::Reason::bad_alphabet: return "bad-alphabet";
        case Rejection::Reason::not_prefix_normal: return "not-prefix-normal";
    }
    return "?";
}

Realization realize_caterpillar(const LeafFunction& lf) {
    using Reason = Rejection::Reason;
    if (lf.n() < 3)
        return Rejection{Reason::too_small, "caterpillars have at least 3 vertices, got n = " + std::to_string(lf.n()),
                         std::nullopt};
    const auto expected = LeafFunction::from_ints({0, 0, 2, 2});
    for (std::size_t i = 0; i < 4; ++i)
        if (lf[i] != expected[i])
            return Rejection{Reason::bad_prefix,
                             "L(" + std::to_string(i) + ") = " + lf[i].str() + ", expected " + expected[i].str(),
                             std::nullopt};

    std::vector<std::uint8_t> letters;
    for (std::size_t i = 4; i <= lf.n(); ++i) {
        const bool finite = lf[i].is_finite();
        const long diff = finite ? static_cast<long>(lf[i].value()) - static_cast<long>(lf[i - 1].value()) : 0;
        if (!finite || diff < 0 || diff > 1)
            return Rejection{Reason::bad_alphabet,
                             "leaf word letter " + std::to_string(i - 3) + " is " +
                                 (finite ? std::to_string(diff) : std::string("w")) + ", not 0 or 1",
                             std::nullopt};
        letters.push_back(static_cast<std::uint8_t>(diff));
    }
    const BinaryWord w(std::move(letters));
    if (auto v = find_prefix_normal_violation(w))
        return Rejection{Reason::not_prefix_normal,
                         "leaf word " + w.str() + " is not prefix normal: prefix " + v->prefix.str() + " has fewer 1s than factor " +
                             v->factor.str(),
                         std::move(v)};

    auto s = rc(w);
    if (leaf_function_caterpillar(s) != lf) throw std::logic_error("realize_caterpillar: reading caterpillar mismatch");
    return s;
}

bool leaf_equivalent(const BinaryWord& a, const BinaryWord& b) {
    return leaf_function_caterpillar(rc(a)) == leaf_function_caterpillar(rc(b));
}

}  // namespace leafword
