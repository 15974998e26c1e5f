#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace treearith {

/// A rooted unordered tree exactly as supplied by input: children appear in
/// arbitrary order. Always non-empty (the struct itself is the root vertex).
struct RawTree {
  std::vector<RawTree> children;
};

/// An immutable rooted unordered tree in canonical form: at every vertex the
/// children are ordered by vertex count ascending, ties broken by their codes
/// interpreted as binary numbers. Two CanonTrees are equal exactly when their
/// codes are bit-identical, which for canonical trees coincides with
/// structural equality.
///
/// Nodes are shared; copies are cheap and all values are safe to share
/// between threads.
class CanonTree {
 public:
  /// The single-vertex tree.
  CanonTree();
  static const CanonTree& leaf();

  /// Builds a vertex over already-canonical children, sorting them into
  /// canonical order.
  static CanonTree node(std::vector<CanonTree> children);

  std::int64_t size() const { return node_->size; }
  std::int64_t leaves() const { return node_->leaves; }
  std::int64_t root_degree() const { return static_cast<std::int64_t>(node_->children.size()); }
  const std::vector<CanonTree>& children() const { return node_->children; }

  /// Structural 64-bit hash; equal trees hash equal.
  std::uint64_t hash() const { return node_->hash; }

  friend bool operator==(const CanonTree& a, const CanonTree& b);
  friend bool operator!=(const CanonTree& a, const CanonTree& b) { return !(a == b); }

 private:
  struct Node {
    std::int64_t size;
    std::int64_t leaves;
    std::uint64_t hash;
    std::vector<CanonTree> children;
  };
  explicit CanonTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend int compare(const CanonTree& a, const CanonTree& b);
};

/// Canonical total order: vertex count first, then the 2n-bit codes compared
/// lexicographically. This equals comparing the codes as binary numbers.
/// Returns -1, 0, or +1.
int compare(const CanonTree& a, const CanonTree& b);

inline bool operator<(const CanonTree& a, const CanonTree& b) { return compare(a, b) < 0; }
inline bool operator<=(const CanonTree& a, const CanonTree& b) { return compare(a, b) <= 0; }
inline bool operator>(const CanonTree& a, const CanonTree& b) { return compare(a, b) > 0; }
inline bool operator>=(const CanonTree& a, const CanonTree& b) { return compare(a, b) >= 0; }

/// A canonical tree together with a sign. Every vertex except the root
/// carries the sign; the root is neutral. The single-vertex tree is neutral
/// and is always stored positive, so 1 == -1 holds by construction.
class SignedTree {
 public:
  SignedTree() = default;
  SignedTree(CanonTree tree)  // NOLINT: positive by default, implicit by design
      : tree_(std::move(tree)) {}
  SignedTree(CanonTree tree, bool negative)
      : tree_(std::move(tree)), negative_(negative && tree_.size() > 1) {}

  const CanonTree& tree() const { return tree_; }
  bool negative() const { return negative_; }
  bool is_one() const { return tree_.size() == 1; }
  std::int64_t size() const { return tree_.size(); }

  friend bool operator==(const SignedTree& a, const SignedTree& b) {
    return a.negative_ == b.negative_ && a.tree_ == b.tree_;
  }
  friend bool operator!=(const SignedTree& a, const SignedTree& b) { return !(a == b); }

 private:
  CanonTree tree_;
  bool negative_ = false;
};

}  // namespace treearith
