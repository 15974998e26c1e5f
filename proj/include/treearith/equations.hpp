#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "treearith/tree.hpp"

namespace treearith {

/// One group of identical root subtrees of the constant term, with its
/// cardinality.
struct ShapeClass {
  CanonTree shape;
  std::int64_t count;
};

/// Root subtrees of t grouped by shape, in canonical shape order.
std::vector<ShapeClass> shape_classes(const CanonTree& t);

/// Solution of a linear tree equation, together with the per-class
/// multiplicities that produced it. Re-evaluating the equation with the
/// solution yields the single-vertex tree; the solver checks this before
/// returning.
struct LinearSolution {
  enum class Condition {
    kSingleUnknown,    // aX + C = 1
    kSameSign,         // X and Y share the sign opposite to C
    kOppositeXMajor,   // X opposite to C carries the X-only classes
    kOppositeYMajor,   // symmetric role assignment
  };

  struct ClassAssignment {
    CanonTree shape;
    std::int64_t c;  // cardinality in C
    std::int64_t x;  // copies per X
    std::int64_t y;  // copies per Y (0 for single-unknown solutions)
  };

  SignedTree x;
  std::optional<SignedTree> y;
  Condition condition = Condition::kSingleUnknown;
  std::vector<ClassAssignment> classes;
  /// A same-sign solution placed parts of one shape class in both X and Y.
  bool split_shared_class = false;
  bool x_is_one = false;
  bool y_is_one = false;
};

/// Solves aX + C = 1 for X, a >= 1. The solution exists exactly when every
/// shape class of C has cardinality divisible by a, and is then unique.
/// Throws NoSolution with a per-class diagnosis otherwise.
LinearSolution solve_linear_one_unknown(std::int64_t a, const SignedTree& c);

/// Solves aX + bY + C = 1 for X and Y, a, b >= 1. Tries the same-sign
/// splitting first, then the two opposite-sign role assignments resolved
/// per class by extended gcd with the smallest non-negative multiplicities.
/// Throws NoSolution with a per-class diagnosis when no assignment works.
LinearSolution solve_linear_two_unknowns(std::int64_t a, std::int64_t b, const SignedTree& c);

/// Vertex-count witnesses for a*nx^2 + b*ny = vertices(C) + a + b - 1 with
/// nx, ny >= 1. A non-empty list is necessary (not sufficient) for the
/// quadratic equation aX^2 + bY + C = 1 to have a tree solution.
struct QuadraticWitnesses {
  bool feasible = false;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;  // (nx, ny)
};

QuadraticWitnesses quadratic_vertex_witnesses(std::int64_t a, std::int64_t b, const SignedTree& c);

/// All integer triples x <= y <= z <= limit with x^2 + y^2 - 1 = z^2: the
/// vertex-count necessary condition for X^2 + Y^2 = Z^2 over trees.
std::vector<std::array<std::int64_t, 3>> quasi_pythagorean(std::int64_t limit);

}  // namespace treearith
