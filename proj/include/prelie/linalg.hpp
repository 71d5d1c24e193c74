#pragma once

#include <vector>

#include "prelie/rational.hpp"

namespace prelie {

using Matrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination; pivots chosen first-nonzero in column
/// order so results are deterministic.
int rank(Matrix m);

/// Whether v lies in the row span of m.
bool in_row_span(const Matrix& m, const std::vector<Rational>& v);

}  // namespace prelie
