#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "motivic/multi_poly.hpp"

namespace motivic {

/// Parses polynomial text such as "1+7L+L^2", "1 - 4*u - 4*v + u*v",
/// "7/27*L*[F]" or "t1^2 + (-7x+27)t1". Juxtaposition multiplies, '^' takes
/// a non-negative integer literal, '/' divides by a rational literal, and a
/// bracketed name like "[V]" is a single variable.
///
/// With an empty `variables` list the ring is the set of names in order of
/// first appearance; otherwise every name must belong to the given list.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables = {});

UniPoly parse_uni(std::string_view text, std::string_view var = "t");
BiPoly parse_bi(std::string_view text, std::string_view u = "u", std::string_view v = "v");

}  // namespace motivic
