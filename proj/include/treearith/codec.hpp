#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "treearith/tree.hpp"

namespace treearith {

/// Textual tree code: '1' on entering a vertex in preorder, '0' on leaving
/// it, most significant bit first. A tree of n vertices has a 2n-bit code.
using TreeCode = std::string;

/// Parses a code into the tree it spells, preserving the child order of the
/// input. Whitespace between bits is ignored. Throws DecodeError with the
/// 0-based position of the first offending character.
RawTree decode(std::string_view code);

/// Emits the canonical 2n-bit code of t.
TreeCode encode(const CanonTree& t);

/// Reorders every vertex's children into canonical order (vertex count
/// ascending, then code ascending). Shape-preserving and idempotent.
CanonTree canonize(const RawTree& t);

struct Measures {
  std::int64_t vertices;     // n
  std::int64_t leaves;       // e
  std::int64_t root_degree;  // s, number of subtrees of the root
};

Measures measures(const CanonTree& t);

/// True when a precedes b with the codes read as binary numbers. Both
/// strings must be valid codes; shorter codes are smaller since every code
/// starts with 1.
bool code_binary_less(std::string_view a, std::string_view b);

}  // namespace treearith
