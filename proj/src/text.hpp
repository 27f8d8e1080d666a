// Small parsing helpers shared by the text formats.
#pragma once

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leafword::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

// Splits on ',' and trims each field. An all-blank input yields no fields.
inline std::vector<std::string_view> split_csv(std::string_view text) {
    std::vector<std::string_view> fields;
    text = trim(text);
    if (text.empty()) return fields;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        fields.push_back(trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

inline std::int64_t parse_integer(std::string_view field) {
    std::int64_t v = 0;
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument("not an integer: '" + std::string(field) + "'");
    return v;
}

inline std::uint64_t parse_natural(std::string_view field) {
    auto v = parse_integer(field);
    if (v < 0) throw std::invalid_argument("expected a natural number: '" + std::string(field) + "'");
    return static_cast<std::uint64_t>(v);
}

}  // namespace leafword::detail
