#include "treearith/enumerate.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "treearith/errors.hpp"

namespace treearith {

namespace {

// f_1, f_2, ... and the divisor sums s(k) = sum_{d|k} d*f_d used by the
// recurrence f_n = (1/(n-1)) * sum_{k=1}^{n-1} s(k) * f_{n-k}.
struct CountCache {
  std::mutex mu;
  std::vector<BigUint> f{BigUint(0), BigUint(1)};  // f[0] unused
  std::vector<BigUint> s{BigUint(0)};
};

CountCache& count_cache() {
  static CountCache cache;
  return cache;
}

struct FamilyCache {
  std::mutex mu;
  std::map<int, std::shared_ptr<const std::vector<CanonTree>>> families;
};

FamilyCache& family_cache() {
  static FamilyCache cache;
  return cache;
}

void partitions_into(int remaining, int min_part, std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    prefix.push_back(p);
    partitions_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

// Non-decreasing index tuples of the given length over 0..pool_size-1, in
// lexicographic order. These are the multiset choices from one size class.
std::vector<std::vector<int>> nondecreasing_tuples(int pool_size, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(length), 0);
  while (true) {
    out.push_back(idx);
    int pos = length - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == pool_size - 1) --pos;
    if (pos < 0) break;
    int v = ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < length; ++i) idx[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

std::vector<CanonTree> generate_group(const std::vector<int>& parts, std::uint64_t cap) {
  // Child lists are extended size class by size class; the choices of earlier
  // (smaller) classes vary slowest so that emitted codes ascend.
  std::vector<std::vector<CanonTree>> lists{{}};
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto& pool = family(parts[i], cap);
    auto tuples = nondecreasing_tuples(static_cast<int>(pool.size()), static_cast<int>(j - i));
    std::vector<std::vector<CanonTree>> next;
    next.reserve(lists.size() * tuples.size());
    for (const auto& base : lists) {
      for (const auto& tup : tuples) {
        std::vector<CanonTree> kids = base;
        kids.reserve(base.size() + tup.size());
        for (int t : tup) kids.push_back(pool[static_cast<std::size_t>(t)]);
        next.push_back(std::move(kids));
      }
    }
    lists = std::move(next);
    i = j;
  }
  std::vector<CanonTree> group;
  group.reserve(lists.size());
  for (auto& kids : lists) group.push_back(CanonTree::node(std::move(kids)));
  return group;
}

// Cumulative rank offset of the first tree in the family of n vertices.
std::uint64_t family_offset(int n, std::uint64_t cap) {
  std::uint64_t off = 1;
  for (int m = 1; m < n; ++m) {
    BigUint c = tree_count(m);
    if (!c.fits_u64() || c.to_u64() > cap) throw LimitExceeded("family size exceeds the cap");
    off += c.to_u64();
  }
  return off;
}

}  // namespace

BigUint tree_count(int n) {
  if (n < 1) throw Error("tree_count: n must be >= 1");
  auto& cache = count_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  for (int m = static_cast<int>(cache.f.size()); m <= n; ++m) {
    // s(k) for k = m-1 becomes available once f_{m-1} is known.
    int k = m - 1;
    BigUint sk(0);
    for (int d = 1; d <= k; ++d) {
      if (k % d == 0) {
        BigUint term = cache.f[static_cast<std::size_t>(d)];
        term.mul_small(static_cast<std::uint64_t>(d));
        sk += term;
      }
    }
    cache.s.push_back(sk);

    BigUint total(0);
    for (int j = 1; j <= m - 1; ++j) {
      total += cache.s[static_cast<std::size_t>(j)] * cache.f[static_cast<std::size_t>(m - j)];
    }
    total.div_exact_small(static_cast<std::uint32_t>(m - 1));
    cache.f.push_back(total);
  }
  return cache.f[static_cast<std::size_t>(n)];
}

std::uint64_t tree_count_u64(int n) { return tree_count(n).to_u64(); }

std::vector<std::vector<int>> size_multisets(int n) {
  std::vector<std::vector<int>> out;
  if (n < 2) return out;
  std::vector<int> prefix;
  partitions_into(n - 1, 1, prefix, out);
  return out;
}

const std::vector<CanonTree>& family(int n, std::uint64_t cap) {
  if (n < 1) throw Error("family: n must be >= 1");
  BigUint c = tree_count(n);
  if (!c.fits_u64() || c.to_u64() > cap) {
    throw LimitExceeded("family of " + std::to_string(n) + " vertices has " + c.to_string() +
                        " trees, above the cap of " + std::to_string(cap));
  }
  {
    auto& cache = family_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.families.find(n);
    if (it != cache.families.end()) return *it->second;
  }

  std::vector<CanonTree> trees;
  if (n == 1) {
    trees.push_back(CanonTree::leaf());
  } else {
    trees.reserve(c.to_u64());
    for (const auto& parts : size_multisets(n)) {
      auto group = generate_group(parts, cap);
      trees.insert(trees.end(), group.begin(), group.end());
    }
    // Each group comes out in ascending code order, but from n = 7 on the
    // groups interleave (two chains of 3 under a root outweigh codes that
    // start 1101...). Ascending binary order is normative, so sort.
    std::sort(trees.begin(), trees.end(),
              [](const CanonTree& a, const CanonTree& b) { return compare(a, b) < 0; });
  }

  auto& cache = family_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto [it, inserted] =
      cache.families.emplace(n, std::make_shared<const std::vector<CanonTree>>(std::move(trees)));
  (void)inserted;
  return *it->second;
}

std::vector<std::pair<std::vector<int>, std::vector<CanonTree>>> family_grouped(int n,
                                                                                std::uint64_t cap) {
  std::vector<std::pair<std::vector<int>, std::vector<CanonTree>>> out;
  if (n == 1) {
    out.emplace_back(std::vector<int>{}, std::vector<CanonTree>{CanonTree::leaf()});
    return out;
  }
  BigUint c = tree_count(n);
  if (!c.fits_u64() || c.to_u64() > cap) throw LimitExceeded("family size exceeds the cap");
  for (const auto& parts : size_multisets(n)) {
    out.emplace_back(parts, generate_group(parts, cap));
  }
  return out;
}

Rank rank_of(const CanonTree& t, std::uint64_t cap) {
  int n = static_cast<int>(t.size());
  const auto& fam = family(n, cap);
  auto it = std::lower_bound(fam.begin(), fam.end(), t, [](const CanonTree& a, const CanonTree& b) {
    return compare(a, b) < 0;
  });
  // Every canonical tree of n vertices is in family(n).
  std::uint64_t pos = static_cast<std::uint64_t>(it - fam.begin());
  return Rank{family_offset(n, cap) + pos, n};
}

CanonTree unrank(std::uint64_t index, std::uint64_t cap) {
  if (index < 1) throw Error("unrank: indices are 1-based");
  std::uint64_t offset = 1;
  for (int n = 1;; ++n) {
    BigUint c = tree_count(n);
    if (!c.fits_u64() || c.to_u64() > cap) {
      throw LimitExceeded("index " + std::to_string(index) + " lies beyond the enumeration cap");
    }
    std::uint64_t fn = c.to_u64();
    if (index < offset + fn) {
      return family(n, cap)[static_cast<std::size_t>(index - offset)];
    }
    offset += fn;
  }
}

std::pair<CanonTree, CanonTree> doubling_rule(const CanonTree& t) {
  std::vector<CanonTree> kids = t.children();
  kids.push_back(CanonTree::leaf());
  CanonTree with_leaf = CanonTree::node(std::move(kids));
  CanonTree stretched = CanonTree::node({t});
  return {with_leaf, stretched};
}

}  // namespace treearith
