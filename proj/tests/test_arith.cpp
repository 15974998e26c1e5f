#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "treearith/arith.hpp"
#include "treearith/codec.hpp"
#include "treearith/enumerate.hpp"
#include "treearith/errors.hpp"
#include "treearith/expr.hpp"
#include "test_util.hpp"

using namespace treearith;
using test_util::t;

namespace {

const SignedTree kOne{CanonTree::leaf()};

// Every vertex of the tree, as a path in canonical child indices.
void all_paths(const CanonTree& t, std::vector<int>& prefix,
               std::vector<std::vector<int>>& out) {
  out.push_back(prefix);
  for (int i = 0; i < static_cast<int>(t.children().size()); ++i) {
    prefix.push_back(i);
    all_paths(t.children()[static_cast<std::size_t>(i)], prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

TEST_CASE("addition of frozen examples") {
  CHECK(add(t(2), t(4)).tree() == t(6));
  CHECK(add(t(3), kOne) == SignedTree(t(3)));
  CHECK(add(kOne, t(3)) == SignedTree(t(3)));
  // cancelling a negative operand
  CHECK(add(t(6), negate(t(2))).tree() == t(4));
  CHECK(add(t(4), t(2)).tree() == t(6));
}

TEST_CASE("subtraction of frozen examples") {
  CHECK(sub(t(6), t(2)).tree() == t(4));
  CHECK(sub(t(5), t(5)) == kOne);
  CHECK(sub(t(3), kOne) == SignedTree(t(3)));
  CHECK_THROWS_AS(sub(t(3), t(4)), UndefinedOperation);
}

TEST_CASE("signed addition needs containment one way") {
  // {leaf} vs {chain-2}: neither contains the other
  CHECK_THROWS_AS(add(t(3), negate(t(4))), UndefinedOperation);
  // negative plus one keeps the sign
  SignedTree neg3 = negate(t(3));
  CHECK(add(neg3, kOne) == neg3);
  CHECK(add(t(3), negate(t(3))) == kOne);
}

TEST_CASE("multiplication of frozen examples") {
  CHECK(mul(t(2), t(3)).tree() == t(20));
  CHECK(mul(t(3), t(2)).tree() == t(22));
  CHECK(mul(t(4), t(2)).tree() == t(24));
  CHECK(mul(t(2), t(4)).tree() == t(28));
  CHECK(mul(t(7), kOne) == SignedTree(t(7)));
  CHECK(mul(kOne, t(7)) == SignedTree(t(7)));
}

TEST_CASE("multiplication sign rule") {
  CHECK(mul(negate(t(2)), t(3)).negative());
  CHECK(mul(negate(t(2)), negate(t(3))).negative() == false);
  CHECK(mul(negate(t(2)), t(3)).tree() == t(20));
}

TEST_CASE("division of frozen examples") {
  CHECK(div(t(20), t(3)).tree() == t(2));
  CHECK(div(t(22), t(2)).tree() == t(3));
  CHECK(div(t(28), t(4)).tree() == t(2));
  CHECK(div(t(9), kOne) == SignedTree(t(9)));
  CHECK(div(t(5), t(5)) == kOne);
  CHECK_THROWS_AS(div(t(20), t(2)), UndefinedOperation);
  CHECK_THROWS_AS(div(t(20), t(4)), UndefinedOperation);
}

TEST_CASE("division sign rule") {
  CHECK(div(t(20), negate(t(3))) == negate(t(2)));
  CHECK(div(negate(t(20)), negate(t(3))) == SignedTree(t(2)));
  CHECK(div(negate(t(20)), t(3)) == negate(t(2)));
  CHECK(div(negate(t(9)), kOne) == negate(t(9)));
}

TEST_CASE("stretch and un-stretch") {
  CHECK(stretch(kOne).tree() == t(2));
  CHECK(stretch(t(3)).tree() == t(7));
  CHECK(stretch(t(2)).tree() == t(4));
  CHECK(unstretch(t(4)).tree() == t(2));
  CHECK(unstretch(t(7)).tree() == t(3));
  CHECK_THROWS_AS(unstretch(t(3)), UndefinedOperation);
  CHECK_THROWS_AS(unstretch(kOne), UndefinedOperation);
  CHECK(unstretch(stretch(negate(t(5)))) == negate(t(5)));
}

TEST_CASE("scalar multiple") {
  CHECK(scalar_mul(2, t(2)).tree() == t(3));
  CHECK(scalar_mul(3, t(2)).tree() == t(5));
  CHECK(scalar_mul(1, t(9)) == SignedTree(t(9)));
  CHECK(scalar_mul(4, kOne) == kOne);
  CHECK(scalar_mul(2, negate(t(3))) == negate(scalar_mul(2, t(3))));
  CHECK_THROWS_AS(scalar_mul(0, t(2)), Error);
}

TEST_CASE("stretch power") {
  CHECK(stretch_pow(2, kOne).tree() == t(4));
  CHECK(stretch_pow(4, kOne).tree() == t(17));
  CHECK(stretch_pow(1, t(3)) == stretch(t(3)));
  CHECK(stretch_pow(3, t(2)).size() == t(2).size() + 3);
}

TEST_CASE("power") {
  CHECK(power(t(2), 2) == mul(t(2), t(2)));
  CHECK(power(t(9), 1) == SignedTree(t(9)));
  CHECK(power(t(3), 2).size() == 9);
  CHECK(power(t(3), 3) == mul(mul(t(3), t(3)), t(3)));
  CHECK(power(negate(t(2)), 3).negative());
  CHECK(power(negate(t(2)), 2).negative() == false);
  CHECK_THROWS_AS(power(t(9), 40), LimitExceeded);
}

TEST_CASE("negate") {
  CHECK(negate(kOne) == kOne);
  CHECK(negate(negate(t(6))) == SignedTree(t(6)));
  CHECK(add(t(6), negate(t(6))) == kOne);
}

TEST_CASE("commutation") {
  CHECK(commutes(t(2), t(3)) == false);
  CHECK(commutes(t(6), t(6)));
  // b*b commutes with b
  for (int n = 2; n <= 5; ++n) {
    for (const CanonTree& b : family(n)) {
      CHECK(commutes(mul(b, b).tree(), b));
    }
  }
}

TEST_CASE("vertex count laws on every pair up to 8 vertices") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 400; ++i) {
    int na = std::uniform_int_distribution<int>(1, 8)(rng);
    int nb = std::uniform_int_distribution<int>(1, 8)(rng);
    CanonTree a = test_util::random_tree(rng, na);
    CanonTree b = test_util::random_tree(rng, nb);
    CHECK(add(a, b).size() == na + nb - 1);
    CHECK(mul(a, b).size() == static_cast<std::int64_t>(na) * nb);
    CHECK(stretch(a).size() == na + 1);
    // every leaf of a product is a leaf of an attached right-factor copy,
    // which needs the right factor to actually attach something
    if (nb > 1) CHECK(mul(a, b).tree().leaves() == na * b.leaves());
  }
}

TEST_CASE("addition is commutative and associative") {
  for (const CanonTree& a : family(5)) {
    for (const CanonTree& b : family(4)) {
      CHECK(add(a, b) == add(b, a));
      for (const CanonTree& c : family(3)) {
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
      }
    }
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    CanonTree a = test_util::random_tree(rng, std::uniform_int_distribution<int>(1, 6)(rng));
    CanonTree b = test_util::random_tree(rng, std::uniform_int_distribution<int>(1, 6)(rng));
    CanonTree c = test_util::random_tree(rng, std::uniform_int_distribution<int>(1, 6)(rng));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
}

TEST_CASE("right distributivity happens only over the single vertex") {
  for (const CanonTree& a : family(3)) {
    for (const CanonTree& b : family(4)) {
      for (int n = 1; n <= 4; ++n) {
        for (const CanonTree& c : family(n)) {
          bool distributes = mul(add(a, b), c) == add(mul(a, c), mul(b, c));
          CHECK(distributes == (c.size() == 1));
        }
      }
    }
  }
}

TEST_CASE("division and subtraction invert multiplication and addition") {
  // exhaustive over every ordered pair with up to 7 vertices each
  std::vector<CanonTree> pool;
  for (int n = 1; n <= 7; ++n) {
    for (const CanonTree& t : family(n)) pool.push_back(t);
  }
  for (const CanonTree& a : pool) {
    for (const CanonTree& b : pool) {
      CHECK(div(mul(a, b), b) == SignedTree(a));
      CHECK(sub(add(a, b), b) == SignedTree(a));
    }
  }
}

TEST_CASE("graft at the root is addition of the stretched subtree") {
  CHECK(graft(CanonTree::leaf(), {}, t(3)) == t(7));
  CHECK(graft(t(2), {0}, CanonTree::leaf()) == t(4));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    CanonTree base = test_util::random_tree(rng, std::uniform_int_distribution<int>(1, 8)(rng));
    CanonTree attachment =
        test_util::random_tree(rng, std::uniform_int_distribution<int>(1, 5)(rng));
    CHECK(graft(base, {}, attachment) == add(base, stretch(attachment)).tree());
  }
}

TEST_CASE("graft at a deep vertex") {
  // chain of 3, graft a leaf under the lowest vertex -> chain of 4
  CanonTree chain3 = t(4);
  CHECK(graft(chain3, {0, 0}, CanonTree::leaf()) == t(8));
  CHECK_THROWS_AS(graft(chain3, {0, 3}, CanonTree::leaf()), Error);
}

namespace {

RawTree to_raw(const CanonTree& t) {
  RawTree out;
  for (const CanonTree& c : t.children()) out.children.push_back(to_raw(c));
  return out;
}

// Direct oracle: attach `a` under the addressed vertex and canonize.
CanonTree attach_directly(const CanonTree& t, const std::vector<int>& path, const CanonTree& a) {
  RawTree raw = to_raw(t);
  RawTree* at = &raw;
  for (int idx : path) at = &at->children[static_cast<std::size_t>(idx)];
  at->children.push_back(to_raw(a));
  return canonize(raw);
}

}  // namespace

TEST_CASE("graft along the path matches direct attachment") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    CanonTree base = test_util::random_tree(rng, std::uniform_int_distribution<int>(1, 10)(rng));
    CanonTree attachment =
        test_util::random_tree(rng, std::uniform_int_distribution<int>(1, 6)(rng));
    std::vector<std::vector<int>> paths;
    std::vector<int> prefix;
    all_paths(base, prefix, paths);
    for (const auto& path : paths) {
      CHECK(graft(base, path, attachment) == attach_directly(base, path, attachment));
    }
  }
}

TEST_CASE("prune removes the addressed subtree") {
  auto [rest, extracted] = prune(t(6), {1});
  CHECK(rest == t(2));
  CHECK(extracted == t(2));

  auto [rest2, extracted2] = prune(t(2), {0});
  CHECK(rest2 == CanonTree::leaf());
  CHECK(extracted2 == CanonTree::leaf());

  CHECK_THROWS_AS(prune(t(6), {}), Error);
  CHECK_THROWS_AS(prune(t(6), {5}), Error);
}

TEST_CASE("prune and graft restore the original tree") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 120; ++i) {
    CanonTree base = test_util::random_tree(rng, std::uniform_int_distribution<int>(2, 8)(rng));
    std::vector<std::vector<int>> paths;
    std::vector<int> prefix;
    all_paths(base, prefix, paths);
    // pick a non-root vertex
    std::size_t pick = std::uniform_int_distribution<std::size_t>(1, paths.size() - 1)(rng);
    auto [rest, extracted] = prune(base, paths[pick]);
    CHECK(rest.size() + extracted.size() == base.size());

    // re-grafting at some vertex of the remainder restores the original
    std::vector<std::vector<int>> rest_paths;
    prefix.clear();
    all_paths(rest, prefix, rest_paths);
    bool restored = false;
    for (const auto& p : rest_paths) {
      if (graft(rest, p, extracted) == base) {
        restored = true;
        break;
      }
    }
    CHECK(restored);
  }
}

TEST_CASE("graft then prune round-trips") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 120; ++i) {
    CanonTree base = test_util::random_tree(rng, std::uniform_int_distribution<int>(1, 8)(rng));
    CanonTree attachment =
        test_util::random_tree(rng, std::uniform_int_distribution<int>(1, 6)(rng));
    std::vector<std::vector<int>> paths;
    std::vector<int> prefix;
    all_paths(base, prefix, paths);
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, paths.size() - 1)(rng);
    CanonTree grown = graft(base, paths[pick], attachment);
    CHECK(grown.size() == base.size() + attachment.size());

    std::vector<std::vector<int>> grown_paths;
    prefix.clear();
    all_paths(grown, prefix, grown_paths);
    bool reversible = false;
    for (const auto& p : grown_paths) {
      if (p.empty()) continue;
      auto [rest, extracted] = prune(grown, p);
      if (rest == base && extracted == attachment) {
        reversible = true;
        break;
      }
    }
    CHECK(reversible);
  }
}
