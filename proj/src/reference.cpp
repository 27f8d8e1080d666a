#include "leafword/reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace leafword::reference {

CaterpillarSequence left_recursive(const CaterpillarSequence& s, std::size_t i) {
    if (i < 3 || i > s.size()) throw std::out_of_range("left_recursive: size out of range");
    std::vector<std::uint32_t> cur = s.entries();
    std::size_t size = s.size();
    while (size > i) {
        if (cur.back() >= 2) {
            cur.back() -= 1;
        } else {
            cur.pop_back();
            cur.back() += 1;
        }
        --size;
    }
    return CaterpillarSequence(std::move(cur));
}

CaterpillarSequence right_recursive(const CaterpillarSequence& s, std::size_t i) {
    if (i < 3 || i > s.size()) throw std::out_of_range("right_recursive: size out of range");
    std::vector<std::uint32_t> cur = s.entries();
    std::size_t size = s.size();
    while (size > i) {
        if (cur.front() >= 2) {
            cur.front() -= 1;
        } else {
            cur.erase(cur.begin());
            cur.front() += 1;
        }
        --size;
    }
    return CaterpillarSequence(std::move(cur));
}

std::size_t f1_by_factors(const BinaryWord& w, std::size_t i) {
    if (i > w.size()) throw std::out_of_range("f1_by_factors: window longer than word");
    std::size_t best = 0;
    for (std::size_t start = 0; start + i <= w.size(); ++start) best = std::max(best, w.factor(start, i).ones());
    return best;
}

}  // namespace leafword::reference
