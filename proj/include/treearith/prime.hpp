#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "treearith/tree.hpp"

namespace treearith {

/// Root subtrees bucketed by vertex count. Groups are ordered by strictly
/// increasing size; inside a group the distinct shapes appear in canonical
/// order with their multiplicities. The union of the first i groups is the
/// candidate root-subtree set of a rightmost factor.
struct SubtreeGroups {
  struct ShapeCount {
    CanonTree shape;
    std::int64_t count;
  };
  struct Group {
    std::int64_t size;  // common vertex count of the shapes in the group
    std::vector<ShapeCount> shapes;
    std::int64_t total;  // number of subtrees in the group
  };
  std::vector<Group> groups;
};

/// True when the tree cannot be written as a sum of two trees other than
/// itself and 1; equivalently the root has exactly one subtree.
/// Primality is undefined for the single-vertex tree.
bool is_add_prime(const CanonTree& t);

/// The unique list of add-prime addends: one stretched subtree per root
/// subtree. Their sum is t.
std::vector<CanonTree> add_factorize(const CanonTree& t);

SubtreeGroups subtree_groups(const CanonTree& t);

/// True when the tree cannot be written as a product of two trees other than
/// itself and 1. Decided in time polynomial in the vertex count by trying
/// each group prefix as the root-subtree set of a rightmost factor and
/// erasing it at every surviving vertex.
bool is_mult_prime(const CanonTree& t);

/// Same decision computed independently on a mutable copy with an explicit
/// preorder traversal. Kept as a cross-check for is_mult_prime.
bool is_mult_prime_traversal(const CanonTree& t);

/// Splits off the rightmost factor: t = quotient * factor with the factor
/// mult-prime, using the smallest viable group prefix. Empty when t is
/// mult-prime or has one vertex.
std::optional<std::pair<CanonTree, CanonTree>> split_rightmost_factor(const CanonTree& t);

/// Full factorization into mult-prime factors, left to right; the left fold
/// of mul over the list reproduces t. The single-vertex tree yields an empty
/// list, a mult-prime tree a singleton.
std::vector<CanonTree> mult_factorize(const CanonTree& t);

/// Exhaustive oracle: multiplies out every factor-size split of n over the
/// corresponding families and looks for t. Only usable for small trees;
/// throws LimitExceeded above `max_vertices`.
bool brute_force_is_mult_prime(const CanonTree& t, std::int64_t max_vertices = 12);

}  // namespace treearith
