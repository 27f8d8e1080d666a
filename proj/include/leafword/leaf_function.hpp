// leaf_function.hpp - values of a leaf function i -> L(i), i = 0..n, over
// the naturals extended with -infinity.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leafword {

// A natural number or -infinity. -inf orders below every finite value and is
// never represented by an integer.
class LeafValue {
public:
    static constexpr LeafValue neg_inf() { return LeafValue{}; }
    static constexpr LeafValue finite(std::uint32_t v) { return LeafValue{v}; }

    constexpr bool is_finite() const { return value_.has_value(); }
    // Throws std::bad_optional_access on -inf.
    constexpr std::uint32_t value() const { return value_.value(); }

    std::string str() const;

    auto operator<=>(const LeafValue&) const = default;

private:
    constexpr LeafValue() = default;
    constexpr explicit LeafValue(std::uint32_t v) : value_(v) {}

    std::optional<std::uint32_t> value_;
};

inline constexpr LeafValue kNegInf = LeafValue::neg_inf();

class LeafFunction {
public:
    LeafFunction() : values_{LeafValue::finite(0)} {}
    // values[i] = L(i); must be non-empty (n = values.size() - 1).
    explicit LeafFunction(std::vector<LeafValue> values);

    // Convenience for literals; negative entries stand for -inf.
    static LeafFunction from_ints(std::initializer_list<long> values);

    std::size_t n() const { return values_.size() - 1; }
    const std::vector<LeafValue>& values() const { return values_; }
    const LeafValue& operator[](std::size_t i) const { return values_[i]; }

    // First violated structural property of a graph leaf function, if any:
    // L(0) = 0, L(1) = 0, L(2) in {2, -inf}, -inf values form a suffix of
    // positions 1..n.
    std::optional<std::string> invariant_violation() const;

    // Non-decreasing over the finite values with no -inf entry.
    bool is_non_decreasing() const;

    bool operator==(const LeafFunction&) const = default;

private:
    std::vector<LeafValue> values_;
};

// {"n": 11, "values": [0, 0, 2, ..., "-inf"]}
std::string to_json(const LeafFunction& lf);
// Throws std::invalid_argument on malformed input or n/values mismatch.
LeafFunction leaf_function_from_json(std::string_view text);

// Comma-separated values, "-inf" for -infinity: "0,0,2,2,-inf".
std::string to_csv(const LeafFunction& lf);
LeafFunction parse_leaf_values(std::string_view text);

}  // namespace leafword
