#pragma once

#include <string>

#include "treearith/tree.hpp"

namespace treearith {

/// Graphviz rendering: children kept in canonical order, the root and
/// positive vertices drawn filled, negative vertices drawn as open circles.
std::string emit_dot(const SignedTree& t);

}  // namespace treearith
