// verify.hpp - exhaustive property sweeps over small words, sequences and
// trees. Each claim is checked on every instance up to a size bound and
// reported with its counterexamples.
#pragma once

#include "leafword/execution.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace leafword {

struct VerifyReport {
    std::string suite;
    std::string claim;
    std::size_t bound = 0;
    std::size_t checked = 0;
    // Counterexample encodings in enumeration order; empty iff the claim holds.
    std::vector<std::string> failures;
    double seconds = 0.0;

    bool passed() const { return failures.empty(); }
};

enum class Suite { poset, morphism, theorem53, theorem61, trees };

inline constexpr Suite kAllSuites[] = {Suite::poset, Suite::morphism, Suite::theorem53, Suite::theorem61,
                                       Suite::trees};

std::string_view to_string(Suite s);
// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);

// Bound used when none is given, and the largest accepted bound:
//   poset      sequence size        7 / 10
//   morphism   sequence size        8 / 10
//   theorem53  word length         10 / 14
//   theorem61  word length          8 / 10
//   trees      tree vertex count   12 / 14
std::size_t default_bound(Suite s);
std::size_t max_bound(Suite s);

// Reports in a fixed claim order. Throws std::invalid_argument when the
// bound exceeds max_bound(s).
std::vector<VerifyReport> run_suite(Suite s, std::optional<std::size_t> bound = std::nullopt,
                                    Execution exec = Execution::parallel);

std::string to_json(const VerifyReport& r);

}  // namespace leafword
