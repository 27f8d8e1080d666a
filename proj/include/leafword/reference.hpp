// reference.hpp - definitional implementations kept to cross-check the fast
// paths: the peeling recursions for Left_i / Right_i and F_1 by listing every
// factor.
#pragma once

#include "leafword/binary_word.hpp"
#include "leafword/caterpillar.hpp"

#include <cstddef>

namespace leafword::reference {

// Left_i(S) = S if i = |S|; otherwise drop one leaf from s_k when s_k >= 2,
// or absorb the last spine vertex into s_{k-1} when s_k = 1.
CaterpillarSequence left_recursive(const CaterpillarSequence& s, std::size_t i);

// Mirror image of left_recursive, peeling from s_1.
CaterpillarSequence right_recursive(const CaterpillarSequence& s, std::size_t i);

// max |v|_1 over the length-i factors v of w, each factor materialized.
std::size_t f1_by_factors(const BinaryWord& w, std::size_t i);

}  // namespace leafword::reference
