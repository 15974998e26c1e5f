#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "treearith/arith.hpp"
#include "treearith/codec.hpp"
#include "treearith/errors.hpp"
#include "treearith/expr.hpp"
#include "test_util.hpp"

using namespace treearith;
using test_util::t;

TEST_CASE("decomposition of frozen examples") {
  ExprPtr chain = decompose(t(4));
  CHECK(expr_equal(*chain, *expr::stretch(expr::stretch(expr::one()))));

  ExprPtr pair = decompose(t(3));
  CHECK(expr_equal(*pair, *expr::add(expr::stretch(expr::one()), expr::stretch(expr::one()))));

  ExprPtr mixed = decompose(t(6));
  CHECK(expr_equal(*mixed, *expr::add(expr::stretch(expr::one()),
                                      expr::stretch(expr::stretch(expr::one())))));

  CHECK(expr_equal(*decompose(CanonTree::leaf()), *expr::one()));
}

TEST_CASE("decomposition uses only the generator, addition and stretch") {
  std::function<bool(const Expr&)> generator_only = [&](const Expr& e) {
    switch (e.kind()) {
      case Expr::Kind::One:
        return true;
      case Expr::Kind::Add:
        return generator_only(*e.lhs()) && generator_only(*e.rhs());
      case Expr::Kind::Stretch:
        return generator_only(*e.lhs());
      default:
        return false;
    }
  };
  for (int n = 1; n <= 8; ++n) {
    for (const CanonTree& tree : family(n)) {
      ExprPtr e = decompose(tree);
      CHECK(generator_only(*e));
      CHECK(eval(*e) == SignedTree(tree));
    }
  }
}

TEST_CASE("evaluation of frozen expressions") {
  CHECK(eval(*expr::mul(expr::literal(t(2)), expr::literal(t(3)))).tree() == t(20));
  CHECK(eval(*expr::one()) == SignedTree(CanonTree::leaf()));
  CHECK(eval(*expr::div(expr::literal(t(22)), expr::literal(t(2)))).tree() == t(3));
  CHECK_THROWS_AS(eval(*expr::div(expr::literal(t(20)), expr::literal(t(2)))),
                  UndefinedOperation);
}

TEST_CASE("parser matches the frozen examples") {
  CHECK(eval(*parse_expr("#2*#3")).tree() == t(20));
  CHECK(eval(*parse_expr("^#1+^#1")).tree() == t(3));
  // bare 1 is the unit tree
  CHECK(expr_equal(*parse_expr("^1+^1"),
                   *expr::add(expr::stretch(expr::one()), expr::stretch(expr::one()))));
  CHECK(eval(*parse_expr("1")) == SignedTree(CanonTree::leaf()));
  CHECK(eval(*parse_expr("1**2")) == SignedTree(CanonTree::leaf()));
  // precedence: multiplication binds before addition
  ExprPtr e = parse_expr("#3*#2+#2");
  CHECK(e->kind() == Expr::Kind::Add);
  CHECK(e->lhs()->kind() == Expr::Kind::Mul);
  CHECK(eval(*e).tree() == add(mul(t(3), t(2)), t(2)).tree());
}

TEST_CASE("parser handles every surface form") {
  CHECK(eval(*parse_expr("\"110100\"")).tree() == t(3));
  CHECK(eval(*parse_expr("'110100'")).tree() == t(3));
  CHECK(eval(*parse_expr("2*#2")).tree() == t(3));
  CHECK(eval(*parse_expr("#2**2")).tree() == mul(t(2), t(2)).tree());
  CHECK(eval(*parse_expr("^^#1")).tree() == t(4));
  CHECK(eval(*parse_expr("4^#1")).tree() == t(17));
  CHECK(eval(*parse_expr("2^^#1")).tree() == t(8));
  CHECK(eval(*parse_expr("_#4")).tree() == t(2));
  CHECK(eval(*parse_expr("-#3")) == negate(t(3)));
  CHECK(eval(*parse_expr("#6-#2")).tree() == t(4));
  CHECK(eval(*parse_expr("#20/#3")).tree() == t(2));
  CHECK(eval(*parse_expr("(#2+#2)*#2")).tree() == mul(t(3), t(2)).tree());
  CHECK(eval(*parse_expr(" #2 * #3 ")).tree() == t(20));
  // stretch binds tighter than multiplication: ^#1*#3 = (^#1)*#3
  CHECK(eval(*parse_expr("^#1*#3")).tree() == mul(t(2), t(3)).tree());
  // un-stretch binds tighter than multiplication
  CHECK(eval(*parse_expr("_#4*#2")).tree() == mul(t(2), t(2)).tree());
  // scalar binds the following factor only
  CHECK(eval(*parse_expr("2*#2*#3")).tree() == mul(t(3), t(3)).tree());
  // non-canonical code literals canonize
  CHECK(eval(*parse_expr("\"11100100\"")).tree() == t(6));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_expr("#2+"), ParseError);
  CHECK_THROWS_AS(parse_expr("(#2"), ParseError);
  CHECK_THROWS_AS(parse_expr("#2 #3"), ParseError);
  CHECK_THROWS_AS(parse_expr("@#2"), ParseError);
  CHECK_THROWS_AS(parse_expr("#0"), ParseError);
  CHECK_THROWS_AS(parse_expr("0*#2"), ParseError);
  CHECK_THROWS_AS(parse_expr("#2**0"), ParseError);
  CHECK_THROWS_AS(parse_expr("\"1010\""), ParseError);
  CHECK_THROWS_AS(parse_expr("\"110100"), ParseError);
  CHECK_THROWS_AS(parse_expr("2+#3"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  try {
    parse_expr("#2 @");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  // ranks beyond the cap are rejected with a clear message
  CHECK_THROWS_AS(parse_expr("#999999999999"), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
  CHECK(print_expr(*parse_expr("#2*#3")) == print_expr(*parse_expr(" #2 * #3")));
  CHECK(print_expr(*expr::one()) == "#1");

  std::mt19937_64 rng(53);
  auto random_expr = [&](auto&& self, int depth) -> ExprPtr {
    int pick = std::uniform_int_distribution<int>(0, depth <= 0 ? 1 : 11)(rng);
    switch (pick) {
      case 0:
        return expr::one();
      case 1:
        return expr::literal(SignedTree(
            test_util::random_tree(rng, std::uniform_int_distribution<int>(2, 6)(rng))));
      case 2:
        return expr::add(self(self, depth - 1), self(self, depth - 1));
      case 3:
        return expr::sub(self(self, depth - 1), self(self, depth - 1));
      case 4:
        return expr::mul(self(self, depth - 1), self(self, depth - 1));
      case 5:
        return expr::div(self(self, depth - 1), self(self, depth - 1));
      case 6:
        return expr::stretch(self(self, depth - 1));
      case 7:
        return expr::unstretch(self(self, depth - 1));
      case 8:
        return expr::scalar_mul(std::uniform_int_distribution<int>(1, 5)(rng),
                                self(self, depth - 1));
      case 9:
        return expr::stretch_pow(std::uniform_int_distribution<int>(1, 5)(rng),
                                 self(self, depth - 1));
      case 10:
        return expr::power(self(self, depth - 1), std::uniform_int_distribution<int>(1, 4)(rng));
      default:
        return expr::negate(self(self, depth - 1));
    }
  };
  for (int i = 0; i < 500; ++i) {
    ExprPtr e = random_expr(random_expr, 4);
    std::string text = print_expr(*e);
    ExprPtr back = parse_expr(text);
    CHECK(expr_equal(*e, *back));
  }
}

TEST_CASE("evaluation matches between printed and original expressions") {
  // decompose output is valid surface syntax
  for (int n = 1; n <= 7; ++n) {
    for (const CanonTree& tree : family(n)) {
      ExprPtr e = decompose(tree);
      CHECK(eval(*parse_expr(print_expr(*e))) == SignedTree(tree));
    }
  }
}
