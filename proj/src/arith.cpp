#include "treearith/arith.hpp"

#include <algorithm>

#include "treearith/errors.hpp"

namespace treearith {

namespace detail {

bool contains_multiset(const std::vector<CanonTree>& big, const std::vector<CanonTree>& small) {
  std::size_t i = 0;
  for (const CanonTree& s : small) {
    while (i < big.size() && compare(big[i], s) < 0) ++i;
    if (i >= big.size() || !(big[i] == s)) return false;
    ++i;
  }
  return true;
}

std::optional<std::vector<CanonTree>> remove_multiset(const std::vector<CanonTree>& big,
                                                      const std::vector<CanonTree>& small) {
  std::vector<CanonTree> rest;
  rest.reserve(big.size() - std::min(big.size(), small.size()));
  std::size_t i = 0;
  for (const CanonTree& s : small) {
    while (i < big.size() && compare(big[i], s) < 0) rest.push_back(big[i++]);
    if (i >= big.size() || !(big[i] == s)) return std::nullopt;
    ++i;
  }
  rest.insert(rest.end(), big.begin() + static_cast<std::ptrdiff_t>(i), big.end());
  return rest;
}

namespace {

std::optional<CanonTree> peel(const CanonTree& x, const std::vector<CanonTree>& divisor_kids) {
  auto rest = remove_multiset(x.children(), divisor_kids);
  if (!rest) return std::nullopt;
  std::vector<CanonTree> mapped;
  mapped.reserve(rest->size());
  for (const CanonTree& c : *rest) {
    auto pc = peel(c, divisor_kids);
    if (!pc) return std::nullopt;
    mapped.push_back(std::move(*pc));
  }
  return CanonTree::node(std::move(mapped));
}

}  // namespace

std::optional<CanonTree> try_divide(const CanonTree& t, const CanonTree& b) {
  if (b.size() == 1) return t;
  if (t.size() % b.size() != 0) return std::nullopt;
  return peel(t, b.children());
}

}  // namespace detail

namespace {

std::vector<CanonTree> merged_children(const CanonTree& a, const CanonTree& b) {
  std::vector<CanonTree> kids;
  kids.reserve(a.children().size() + b.children().size());
  kids.insert(kids.end(), a.children().begin(), a.children().end());
  kids.insert(kids.end(), b.children().begin(), b.children().end());
  return kids;
}

CanonTree attach_everywhere(const CanonTree& x, const std::vector<CanonTree>& extra) {
  std::vector<CanonTree> kids;
  kids.reserve(x.children().size() + extra.size());
  for (const CanonTree& c : x.children()) kids.push_back(attach_everywhere(c, extra));
  kids.insert(kids.end(), extra.begin(), extra.end());
  return CanonTree::node(std::move(kids));
}

void check_result_size(std::int64_t vertices) {
  if (vertices > kMaxResultVertices) {
    throw LimitExceeded("operation result would have " + std::to_string(vertices) +
                        " vertices, above the limit of " + std::to_string(kMaxResultVertices));
  }
}

const CanonTree& subtree_at(const CanonTree& t, const std::vector<int>& path, std::size_t depth) {
  const CanonTree* cur = &t;
  for (std::size_t i = 0; i < depth; ++i) {
    int idx = path[i];
    if (idx < 0 || static_cast<std::size_t>(idx) >= cur->children().size()) {
      throw Error("invalid path: index " + std::to_string(idx) + " at depth " + std::to_string(i));
    }
    cur = &cur->children()[static_cast<std::size_t>(idx)];
  }
  return *cur;
}

}  // namespace

SignedTree add(const SignedTree& a, const SignedTree& b) {
  if (a.negative() == b.negative()) {
    check_result_size(a.size() + b.size() - 1);
    return SignedTree(CanonTree::node(merged_children(a.tree(), b.tree())), a.negative());
  }
  // Opposite signs: identical shapes cancel, which requires one root-subtree
  // multiset to contain the other.
  if (auto rest = detail::remove_multiset(a.tree().children(), b.tree().children())) {
    return SignedTree(CanonTree::node(std::move(*rest)), a.negative());
  }
  if (auto rest = detail::remove_multiset(b.tree().children(), a.tree().children())) {
    return SignedTree(CanonTree::node(std::move(*rest)), b.negative());
  }
  throw UndefinedOperation(
      "signed addition undefined: neither root-subtree multiset contains the other");
}

SignedTree sub(const SignedTree& t, const SignedTree& b) { return add(t, negate(b)); }

SignedTree mul(const SignedTree& a, const SignedTree& b) {
  bool neg = a.negative() != b.negative();
  if (b.is_one()) return SignedTree(a.tree(), neg);
  if (a.is_one()) return SignedTree(b.tree(), neg);
  check_result_size(a.size() * b.size());
  return SignedTree(attach_everywhere(a.tree(), b.tree().children()), neg);
}

SignedTree div(const SignedTree& t, const SignedTree& b) {
  bool neg = t.negative() != b.negative();
  if (b.is_one()) return SignedTree(t.tree(), neg);
  auto q = detail::try_divide(t.tree(), b.tree());
  if (!q) throw UndefinedOperation("division undefined: no quotient reproduces the tree");
  return SignedTree(std::move(*q), neg);
}

SignedTree stretch(const SignedTree& a) {
  check_result_size(a.size() + 1);
  return SignedTree(CanonTree::node({a.tree()}), a.negative());
}

SignedTree unstretch(const SignedTree& a) {
  if (a.tree().root_degree() != 1) {
    throw UndefinedOperation("un-stretch undefined: root has " +
                             std::to_string(a.tree().root_degree()) + " subtrees, expected 1");
  }
  return SignedTree(a.tree().children().front(), a.negative());
}

SignedTree scalar_mul(std::int64_t k, const SignedTree& a) {
  if (k < 1) throw Error("scalar_mul: k must be >= 1");
  check_result_size(k * a.size() - k + 1);
  std::vector<CanonTree> kids;
  kids.reserve(static_cast<std::size_t>(k) * a.tree().children().size());
  for (std::int64_t i = 0; i < k; ++i) {
    kids.insert(kids.end(), a.tree().children().begin(), a.tree().children().end());
  }
  return SignedTree(CanonTree::node(std::move(kids)), a.negative());
}

SignedTree stretch_pow(std::int64_t k, const SignedTree& a) {
  if (k < 1) throw Error("stretch_pow: k must be >= 1");
  check_result_size(a.size() + k);
  SignedTree out = a;
  for (std::int64_t i = 0; i < k; ++i) out = stretch(out);
  return out;
}

SignedTree power(const SignedTree& a, std::int64_t k) {
  if (k < 1) throw Error("power: k must be >= 1");
  std::int64_t n = a.size();
  for (std::int64_t i = 1; i < k; ++i) {
    if (n > kMaxResultVertices / a.size()) {
      throw LimitExceeded("power result exceeds the vertex limit");
    }
    n *= a.size();
  }
  // Square-and-multiply; associativity makes the combination order free.
  SignedTree result(CanonTree::leaf());
  SignedTree base = a;
  std::int64_t e = k;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

SignedTree negate(const SignedTree& a) { return SignedTree(a.tree(), !a.negative()); }

bool commutes(const CanonTree& a, const CanonTree& b) {
  return mul(a, b).tree() == mul(b, a).tree();
}

CanonTree graft(const CanonTree& t, const std::vector<int>& path, const CanonTree& a) {
  // Subtrees along the path, root first.
  std::vector<CanonTree> chain;
  chain.reserve(path.size() + 1);
  for (std::size_t d = 0; d <= path.size(); ++d) chain.push_back(subtree_at(t, path, d));

  // Peel each path subtree off its parent, extend the target, reassemble.
  std::vector<SignedTree> stripped;
  stripped.reserve(path.size());
  for (std::size_t i = 0; i + 1 <= path.size(); ++i) {
    stripped.push_back(sub(chain[i], stretch(chain[i + 1])));
  }
  SignedTree current = add(chain.back(), stretch(a));
  for (std::size_t i = path.size(); i-- > 0;) {
    current = add(stripped[i], stretch(current));
  }
  return current.tree();
}

std::pair<CanonTree, CanonTree> prune(const CanonTree& t, const std::vector<int>& path) {
  if (path.empty()) throw Error("invalid path: cannot prune the root");
  std::vector<CanonTree> chain;
  chain.reserve(path.size() + 1);
  for (std::size_t d = 0; d <= path.size(); ++d) chain.push_back(subtree_at(t, path, d));

  CanonTree extracted = chain.back();
  SignedTree current = sub(chain[path.size() - 1], stretch(extracted));
  for (std::size_t i = path.size() - 1; i-- > 0;) {
    SignedTree stripped = sub(chain[i], stretch(chain[i + 1]));
    current = add(stripped, stretch(current));
  }
  return {current.tree(), extracted};
}

}  // namespace treearith
