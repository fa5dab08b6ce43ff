#pragma once

#include <cstddef>
#include <vector>

#include "crg/scalar/gauss_rational.hpp"

namespace crg {

// Row rank by exact Gaussian elimination. Rows may have any common length.
std::size_t rank_over_q(std::vector<std::vector<Rational>> rows);
std::size_t rank_over_qi(std::vector<std::vector<GaussRat>> rows);

}  // namespace crg
