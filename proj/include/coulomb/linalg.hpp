#pragma once

#include <optional>
#include <vector>

#include "coulomb/rational.hpp"

namespace coulomb {

/// Solve A x = b over the rationals. Returns one solution (free variables set
/// to 0) or nullopt if the system is inconsistent. A is row-major, rows may
/// exceed or undercut the column count.
std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> a,
                                                std::vector<Scalar> b);

}  // namespace coulomb
