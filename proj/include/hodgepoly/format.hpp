#ifndef HODGEPOLY_FORMAT_HPP
#define HODGEPOLY_FORMAT_HPP

#include <string>

#include "hodgepoly/laurent.hpp"

namespace hodge {

// Terms are written in canonical order. Equal exponents are grouped as
// (uv)^k, e.g. "1 + uv + 2 u v^2 + 2 u^2 v + (uv)^2".
std::string to_text(const LaurentPoly& p);
std::string to_text(const UniPoly& p);
std::string to_latex(const LaurentPoly& p);
std::string to_latex(const UniPoly& p);

} // namespace hodge

#endif
