#pragma once

#include "repring/partition.hpp"

#include <vector>

namespace repring {

using IntMatrix = std::vector<std::vector<Int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Fraction-free (Bareiss) elimination; exact.
int integer_rank(IntMatrix a);
// Rows are scaled to integers first, then integer_rank.
int rational_rank(const RationalMatrix& a);

}  // namespace repring
