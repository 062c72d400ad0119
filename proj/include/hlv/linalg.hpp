#pragma once

#include "hlv/trational.hpp"

#include <vector>

namespace hlv {

using RationalMatrix = std::vector<std::vector<TRational>>;

/// Inverse over Q(t) by Gauss-Jordan elimination. The pivot in each column
/// is the nonzero entry of lowest total degree. Throws IntegrityError when
/// the matrix is singular or not square.
RationalMatrix invert(RationalMatrix matrix);

} // namespace hlv
