#include "treearith/tree.hpp"

#include <algorithm>
#include <utility>

namespace treearith {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * kFnvPrime;
}

// Streams the code bits of a canonical tree in order without materializing
// the code: 1 on entering a vertex, 0 on leaving it.
class BitStream {
 public:
  explicit BitStream(const CanonTree& root) : root_(&root) { stack_.reserve(16); }

  // Returns 1 or 0; exactly 2*size bits before exhaustion.
  int next() {
    if (!started_) {
      started_ = true;
      stack_.push_back({root_, 0});
      return 1;
    }
    auto& top = stack_.back();
    const auto& kids = top.first->children();
    if (top.second < kids.size()) {
      const CanonTree* child = &kids[top.second++];
      stack_.push_back({child, 0});
      return 1;
    }
    stack_.pop_back();
    return 0;
  }

 private:
  const CanonTree* root_;
  std::vector<std::pair<const CanonTree*, std::size_t>> stack_;
  bool started_ = false;
};

}  // namespace

CanonTree::CanonTree() : node_(leaf().node_) {}

const CanonTree& CanonTree::leaf() {
  static const CanonTree kLeaf{std::make_shared<const Node>(Node{1, 1, kFnvOffset, {}})};
  return kLeaf;
}

CanonTree CanonTree::node(std::vector<CanonTree> children) {
  if (children.empty()) return leaf();
  if (!std::is_sorted(children.begin(), children.end(),
                      [](const CanonTree& a, const CanonTree& b) { return compare(a, b) < 0; })) {
    std::sort(children.begin(), children.end(),
              [](const CanonTree& a, const CanonTree& b) { return compare(a, b) < 0; });
  }
  std::int64_t size = 1;
  std::int64_t leaves = 0;
  std::uint64_t h = kFnvOffset;
  for (const CanonTree& c : children) {
    size += c.size();
    leaves += c.leaves();
    h = mix(h, c.hash());
  }
  h = mix(h, static_cast<std::uint64_t>(size));
  return CanonTree{std::make_shared<const Node>(Node{size, leaves, h, std::move(children)})};
}

bool operator==(const CanonTree& a, const CanonTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  const auto& ka = a.node_->children;
  const auto& kb = b.node_->children;
  if (ka.size() != kb.size()) return false;
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (!(ka[i] == kb[i])) return false;
  }
  return true;
}

int compare(const CanonTree& a, const CanonTree& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.node_ == b.node_ || a == b) return 0;
  BitStream sa(a);
  BitStream sb(b);
  // Equal sizes: both streams hold exactly 2n bits, and no canonical code is
  // a proper prefix of another, so the loop always hits a differing bit.
  for (std::int64_t i = 0; i < 2 * a.size(); ++i) {
    int ba = sa.next();
    int bb = sb.next();
    if (ba != bb) return ba < bb ? -1 : 1;
  }
  return 0;
}

}  // namespace treearith
