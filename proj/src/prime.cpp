#include "treearith/prime.hpp"

#include <algorithm>
#include <memory>

#include "treearith/arith.hpp"
#include "treearith/enumerate.hpp"
#include "treearith/errors.hpp"

namespace treearith {

namespace {

void require_multivertex(const CanonTree& t, const char* op) {
  if (t.size() == 1) {
    throw UndefinedOperation(std::string(op) + " is undefined for the single-vertex tree");
  }
}

// Child-count boundaries of the group prefixes: entry i is the number of
// root subtrees with size <= the i-th distinct size.
std::vector<std::size_t> prefix_boundaries(const CanonTree& t) {
  std::vector<std::size_t> bounds;
  const auto& kids = t.children();
  std::size_t i = 0;
  while (i < kids.size()) {
    std::size_t j = i;
    while (j < kids.size() && kids[j].size() == kids[i].size()) ++j;
    bounds.push_back(j);
    i = j;
  }
  return bounds;
}

CanonTree prefix_factor(const CanonTree& t, std::size_t upto) {
  const auto& kids = t.children();
  return CanonTree::node(std::vector<CanonTree>(kids.begin(),
                                                kids.begin() + static_cast<std::ptrdiff_t>(upto)));
}

}  // namespace

bool is_add_prime(const CanonTree& t) {
  require_multivertex(t, "add-primality");
  return t.root_degree() == 1;
}

std::vector<CanonTree> add_factorize(const CanonTree& t) {
  require_multivertex(t, "add-factorization");
  std::vector<CanonTree> out;
  out.reserve(t.children().size());
  for (const CanonTree& c : t.children()) out.push_back(CanonTree::node({c}));
  return out;
}

SubtreeGroups subtree_groups(const CanonTree& t) {
  require_multivertex(t, "subtree grouping");
  SubtreeGroups out;
  const auto& kids = t.children();
  std::size_t i = 0;
  while (i < kids.size()) {
    SubtreeGroups::Group group;
    group.size = kids[i].size();
    group.total = 0;
    while (i < kids.size() && kids[i].size() == group.size) {
      if (!group.shapes.empty() && group.shapes.back().shape == kids[i]) {
        ++group.shapes.back().count;
      } else {
        group.shapes.push_back({kids[i], 1});
      }
      ++group.total;
      ++i;
    }
    out.groups.push_back(std::move(group));
  }
  return out;
}

bool is_mult_prime(const CanonTree& t) {
  require_multivertex(t, "mult-primality");
  return !split_rightmost_factor(t).has_value();
}

std::optional<std::pair<CanonTree, CanonTree>> split_rightmost_factor(const CanonTree& t) {
  if (t.size() == 1) return std::nullopt;
  auto bounds = prefix_boundaries(t);
  // The full prefix is excluded: it would make the factor the tree itself.
  for (std::size_t gi = 0; gi + 1 < bounds.size(); ++gi) {
    CanonTree factor = prefix_factor(t, bounds[gi]);
    if (t.size() % factor.size() != 0) continue;  // cannot change the answer
    if (auto quotient = detail::try_divide(t, factor)) {
      return std::make_pair(std::move(*quotient), std::move(factor));
    }
  }
  return std::nullopt;
}

std::vector<CanonTree> mult_factorize(const CanonTree& t) {
  std::vector<CanonTree> factors;
  CanonTree rest = t;
  while (rest.size() > 1) {
    auto split = split_rightmost_factor(rest);
    if (!split) {
      factors.push_back(rest);
      break;
    }
    factors.push_back(split->second);
    rest = split->first;
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

namespace {

// Mutable working copy for the traversal variant.
struct MutNode {
  std::vector<std::unique_ptr<MutNode>> children;
};

std::unique_ptr<MutNode> to_mut(const CanonTree& t) {
  auto node = std::make_unique<MutNode>();
  node->children.reserve(t.children().size());
  for (const CanonTree& c : t.children()) node->children.push_back(to_mut(c));
  return node;
}

CanonTree freeze(const MutNode& node) {
  std::vector<CanonTree> kids;
  kids.reserve(node.children.size());
  for (const auto& c : node.children) kids.push_back(freeze(*c));
  return CanonTree::node(std::move(kids));
}

// Erases one copy of each shape in `wanted` from the children of `node`,
// or reports failure without touching it.
bool erase_group(MutNode& node, const std::vector<CanonTree>& wanted) {
  std::vector<std::size_t> victims;
  std::vector<bool> used(node.children.size(), false);
  for (const CanonTree& w : wanted) {
    bool found = false;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (used[i]) continue;
      if (freeze(*node.children[i]) == w) {
        used[i] = true;
        victims.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  std::sort(victims.begin(), victims.end());
  for (std::size_t k = victims.size(); k-- > 0;) {
    node.children.erase(node.children.begin() + static_cast<std::ptrdiff_t>(victims[k]));
  }
  return true;
}

bool cycle_completes(const CanonTree& t, const std::vector<CanonTree>& wanted) {
  auto copy = to_mut(t);
  // Preorder over the changing copy; erased subtrees are never visited.
  std::vector<MutNode*> stack{copy.get()};
  while (!stack.empty()) {
    MutNode* x = stack.back();
    stack.pop_back();
    if (!erase_group(*x, wanted)) return false;
    for (auto& c : x->children) stack.push_back(c.get());
  }
  return true;
}

}  // namespace

bool is_mult_prime_traversal(const CanonTree& t) {
  require_multivertex(t, "mult-primality");
  auto bounds = prefix_boundaries(t);
  for (std::size_t gi = 0; gi + 1 < bounds.size(); ++gi) {
    const auto& kids = t.children();
    std::vector<CanonTree> wanted(kids.begin(),
                                  kids.begin() + static_cast<std::ptrdiff_t>(bounds[gi]));
    if (cycle_completes(t, wanted)) return false;
  }
  return true;
}

bool brute_force_is_mult_prime(const CanonTree& t, std::int64_t max_vertices) {
  require_multivertex(t, "mult-primality");
  if (t.size() > max_vertices) {
    throw LimitExceeded("brute-force primality capped at " + std::to_string(max_vertices) +
                        " vertices");
  }
  std::int64_t n = t.size();
  for (std::int64_t a = 2; a * 2 <= n; ++a) {
    if (n % a != 0) continue;
    std::int64_t b = n / a;
    for (const CanonTree& left : family(static_cast<int>(a))) {
      for (const CanonTree& right : family(static_cast<int>(b))) {
        if (mul(left, right).tree() == t) return false;
        if (mul(right, left).tree() == t) return false;
      }
    }
  }
  return true;
}

}  // namespace treearith
