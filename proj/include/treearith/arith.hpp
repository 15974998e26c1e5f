#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "treearith/tree.hpp"

namespace treearith {

/// Results larger than this many vertices are refused with LimitExceeded.
inline constexpr std::int64_t kMaxResultVertices = 1 << 22;

/// Root merge: the subtrees of both roots become the subtrees of one new
/// root. For operands of opposite sign the smaller root-subtree multiset
/// must be contained in the larger one; identical shapes cancel pairwise.
/// a + 1 = 1 + a = a.
SignedTree add(const SignedTree& a, const SignedTree& b);

/// Inverse of add: sub(t, b) = add(t, negate(b)). Defined when every root
/// subtree of b also appears under t's root. t - 1 = t.
SignedTree sub(const SignedTree& t, const SignedTree& b);

/// Every vertex of a receives copies of all root subtrees of b.
/// Vertex counts multiply; leaf count of the result is n_a * e_b.
/// The result is positive when the signs agree, negative otherwise.
SignedTree mul(const SignedTree& a, const SignedTree& b);

/// Inverse of mul: returns q with mul(q, b) = t, peeling one copy of b's
/// root-subtree multiset at every surviving vertex. Throws when t is not a
/// product with right factor b.
SignedTree div(const SignedTree& t, const SignedTree& b);

/// New root with the operand attached as its only subtree.
SignedTree stretch(const SignedTree& a);

/// Inverse of stretch; defined only when the root has exactly one subtree.
SignedTree unstretch(const SignedTree& a);

/// Sum of k copies: root gains k copies of each root subtree of a.
SignedTree scalar_mul(std::int64_t k, const SignedTree& a);

/// a stretched k times; adds k vertices.
SignedTree stretch_pow(std::int64_t k, const SignedTree& a);

/// Product of k copies of a; vertex count n_a^k.
SignedTree power(const SignedTree& a, std::int64_t k);

/// Flips the sign of every non-root vertex. negate(1) = 1.
SignedTree negate(const SignedTree& a);

/// True when mul(a, b) and mul(b, a) coincide. Rare: for equal sizes it
/// forces a = b.
bool commutes(const CanonTree& a, const CanonTree& b);

/// Attaches `a` as a new subtree of the vertex addressed by `path` (child
/// indices in canonical order; the empty path is the root), expressed as the
/// peel/extend/reassemble composition over add, sub and stretch along the
/// root-to-vertex path. Addresses are not stable across canonization of
/// unrelated edits.
CanonTree graft(const CanonTree& t, const std::vector<int>& path, const CanonTree& a);

/// Removes the subtree rooted at the addressed non-root vertex. Returns
/// (remainder, extracted); grafting the extracted tree back at the parent
/// path restores t.
std::pair<CanonTree, CanonTree> prune(const CanonTree& t, const std::vector<int>& path);

namespace detail {

/// Division without the error path: empty when t is not divisible by b.
std::optional<CanonTree> try_divide(const CanonTree& t, const CanonTree& b);

/// Multiset containment of canonically sorted child vectors.
bool contains_multiset(const std::vector<CanonTree>& big, const std::vector<CanonTree>& small);

/// big minus small as multisets; empty when not contained.
std::optional<std::vector<CanonTree>> remove_multiset(const std::vector<CanonTree>& big,
                                                      const std::vector<CanonTree>& small);

}  // namespace detail

}  // namespace treearith
