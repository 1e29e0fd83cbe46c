#pragma once

#include <vector>

#include "qgroupoid/qtorus.hpp"

namespace qg {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Rank over the rationals (exact Gaussian elimination).
int integer_rank(IntMatrix m);

IntMatrix to_int_matrix(const std::vector<std::vector<int>> &rows);

} // namespace qg
