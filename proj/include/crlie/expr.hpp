#pragma once

#include <string>
#include <vector>

#include "crlie/linalg.hpp"

namespace crlie {

/// Parses a linear combination over named generators, e.g. "X - i Y",
/// "2z", "1/2 x1 + i y2". Coefficients are Gaussian rationals written as
/// [rational][i] with an optional '*'. Names match case-sensitively first,
/// then case-insensitively (so lowercase dual-form names resolve).
Vec<GaussRational> parse_linear_combination(const std::string& text,
                                            const std::vector<std::string>& names);

}  // namespace crlie
