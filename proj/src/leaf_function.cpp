#include "leafword/leaf_function.hpp"

#include "text.hpp"

#include <json.hpp>

#include <stdexcept>

namespace leafword {

std::string LeafValue::str() const {
    return is_finite() ? std::to_string(*value_) : std::string("-inf");
}

LeafFunction::LeafFunction(std::vector<LeafValue> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("leaf function needs at least L(0)");
}

LeafFunction LeafFunction::from_ints(std::initializer_list<long> values) {
    std::vector<LeafValue> out;
    out.reserve(values.size());
    for (long v : values) out.push_back(v < 0 ? kNegInf : LeafValue::finite(static_cast<std::uint32_t>(v)));
    return LeafFunction(std::move(out));
}

std::optional<std::string> LeafFunction::invariant_violation() const {
    if (values_[0] != LeafValue::finite(0)) return "L(0) must be 0";
    if (n() >= 1 && values_[1] != LeafValue::finite(0)) return "L(1) must be 0";
    if (n() >= 2 && values_[2] != LeafValue::finite(2) && values_[2] != kNegInf) return "L(2) must be 2 or -inf";
    bool seen_neg_inf = false;
    for (std::size_t i = 1; i <= n(); ++i) {
        if (!values_[i].is_finite()) {
            seen_neg_inf = true;
        } else if (seen_neg_inf) {
            return "-inf values must form a suffix (finite L(" + std::to_string(i) + ") after -inf)";
        }
    }
    return std::nullopt;
}

bool LeafFunction::is_non_decreasing() const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!values_[i].is_finite()) return false;
        if (i > 0 && values_[i] < values_[i - 1]) return false;
    }
    return true;
}

std::string to_json(const LeafFunction& lf) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : lf.values()) {
        if (v.is_finite()) values.push_back(v.value());
        else values.push_back("-inf");
    }
    nlohmann::json j;
    j["n"] = lf.n();
    j["values"] = std::move(values);
    return j.dump();
}

LeafFunction leaf_function_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("leaf function JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("values") || !j["values"].is_array() ||
        !j["n"].is_number_unsigned())
        throw std::invalid_argument("leaf function JSON must have unsigned \"n\" and array \"values\"");
    std::vector<LeafValue> values;
    for (const auto& v : j["values"]) {
        if (v.is_string() && v.get<std::string>() == "-inf") values.push_back(kNegInf);
        else if (v.is_number_unsigned()) values.push_back(LeafValue::finite(v.get<std::uint32_t>()));
        else throw std::invalid_argument("leaf function JSON: values must be naturals or \"-inf\"");
    }
    if (values.size() != j["n"].get<std::size_t>() + 1)
        throw std::invalid_argument("leaf function JSON: values must have n+1 entries");
    return LeafFunction(std::move(values));
}

std::string to_csv(const LeafFunction& lf) {
    std::string out;
    for (std::size_t i = 0; i < lf.values().size(); ++i) {
        if (i) out += ',';
        out += lf[i].str();
    }
    return out;
}

LeafFunction parse_leaf_values(std::string_view text) {
    std::vector<LeafValue> values;
    for (auto field : detail::split_csv(text)) {
        if (field == "-inf") values.push_back(kNegInf);
        else values.push_back(LeafValue::finite(static_cast<std::uint32_t>(detail::parse_natural(field))));
    }
    if (values.empty()) throw std::invalid_argument("empty leaf value list");
    return LeafFunction(std::move(values));
}

}  // namespace leafword
