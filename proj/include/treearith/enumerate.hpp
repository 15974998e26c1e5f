#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "treearith/biguint.hpp"
#include "treearith/tree.hpp"

namespace treearith {

/// Families above this cardinality are not materialized unless the caller
/// raises the cap.
inline constexpr std::uint64_t kDefaultFamilyCap = 10'000'000;

/// Number of canonical trees with n vertices, computed by the counting
/// recurrence (exact for all n; arbitrary precision).
BigUint tree_count(int n);

/// Same, narrowed to 64 bits; throws Overflow when the count does not fit.
std::uint64_t tree_count_u64(int n);

/// Multisets of positive integers summing to n-1, each sorted ascending, in
/// ascending lexicographic order of the part sequences. These index the
/// groups of consecutive trees inside a family: the parts are the vertex
/// counts of the root's subtrees.
std::vector<std::vector<int>> size_multisets(int n);

/// All canonical trees of n vertices, codes strictly increasing as binary
/// numbers. Results are cached; the returned reference stays valid for the
/// lifetime of the process. Throws LimitExceeded when tree_count(n) > cap.
const std::vector<CanonTree>& family(int n, std::uint64_t cap = kDefaultFamilyCap);

/// family(n) split into its size-multiset groups, in multiset order, each
/// group in ascending code order. The concatenation holds the same trees as
/// family(n); it coincides with family(n) through n = 6, but from n = 7 on
/// the two orders interleave and family(n)'s binary order is the normative
/// numbering.
std::vector<std::pair<std::vector<int>, std::vector<CanonTree>>> family_grouped(
    int n, std::uint64_t cap = kDefaultFamilyCap);

/// Global 1-based position of a tree: trees are numbered family by family,
/// inside each family by ascending code.
struct Rank {
  std::uint64_t index;  // global, 1-based
  int vertices;         // the family the tree belongs to
};

Rank rank_of(const CanonTree& t, std::uint64_t cap = kDefaultFamilyCap);
CanonTree unrank(std::uint64_t index, std::uint64_t cap = kDefaultFamilyCap);

/// The two standard one-vertex extensions of t: a new leaf child of the
/// root, and a new root above t. Jointly these map the family of n vertices
/// into most (not all) of the family of n+1.
std::pair<CanonTree, CanonTree> doubling_rule(const CanonTree& t);

}  // namespace treearith
