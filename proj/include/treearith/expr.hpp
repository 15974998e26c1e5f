#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "treearith/enumerate.hpp"
#include "treearith/tree.hpp"

namespace treearith {

/// Expression over tree literals and the operator set. Immutable; shared
/// subexpressions are allowed.
///
/// Surface syntax (parse_expr / print_expr):
///   literals        #k (global rank) or a quoted code, "110100" or '110100'
///   binary          + - * /           (left associative; * / bind tighter)
///   prefix          ^ stretch, _ un-stretch (bind tighter than * /)
///   scalar multiple k*expr            (k >= 1)
///   stretch power   k^expr            (k >= 1; k stretches at once)
///   negate          -expr             (binds like a scalar coefficient)
///   power           expr**k           (k >= 1, binds tightest)
///   parentheses     ( expr )
class Expr {
 public:
  enum class Kind {
    One,         // the single-vertex tree
    Literal,     // a positive tree value
    Add,
    Sub,
    Mul,
    Div,
    Stretch,
    Unstretch,
    ScalarMul,   // k * operand
    StretchPow,  // k ^ operand: the operand stretched k times
    Power,       // operand ** k
    Negate,
  };

  Kind kind() const { return kind_; }
  const SignedTree& literal() const { return literal_; }
  std::int64_t scalar() const { return scalar_; }
  const std::shared_ptr<const Expr>& lhs() const { return lhs_; }
  const std::shared_ptr<const Expr>& rhs() const { return rhs_; }

  Expr(Kind kind, SignedTree literal, std::int64_t scalar, std::shared_ptr<const Expr> lhs,
       std::shared_ptr<const Expr> rhs)
      : kind_(kind), literal_(std::move(literal)), scalar_(scalar), lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {}

 private:
  Kind kind_;
  SignedTree literal_;  // Literal only
  std::int64_t scalar_ = 0;
  std::shared_ptr<const Expr> lhs_;
  std::shared_ptr<const Expr> rhs_;  // binary nodes only
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace expr {
ExprPtr one();
/// Negative trees become Negate around a positive literal; the single-vertex
/// tree becomes One.
ExprPtr literal(const SignedTree& value);
ExprPtr add(ExprPtr l, ExprPtr r);
ExprPtr sub(ExprPtr l, ExprPtr r);
ExprPtr mul(ExprPtr l, ExprPtr r);
ExprPtr div(ExprPtr l, ExprPtr r);
ExprPtr stretch(ExprPtr e);
ExprPtr unstretch(ExprPtr e);
ExprPtr scalar_mul(std::int64_t k, ExprPtr e);
ExprPtr stretch_pow(std::int64_t k, ExprPtr e);
ExprPtr power(ExprPtr e, std::int64_t k);
ExprPtr negate(ExprPtr e);
}  // namespace expr

bool expr_equal(const Expr& a, const Expr& b);

/// Writes t as an expression over One, Add and Stretch only:
/// a single root subtree stretches, k >= 2 subtrees split the last one off.
/// eval(decompose(t)) == t.
ExprPtr decompose(const CanonTree& t);

/// Recursive evaluation; operand errors (undefined subtraction, division,
/// un-stretch) propagate.
SignedTree eval(const Expr& e);

/// Parses the surface syntax; #k literals resolve through unrank under the
/// given cap. Throws ParseError with a 0-based position.
ExprPtr parse_expr(std::string_view text, std::uint64_t cap = kDefaultFamilyCap);

/// Inverse of parse_expr: parse_expr(print_expr(e)) is structurally equal
/// to e for every expression.
std::string print_expr(const Expr& e);

}  // namespace treearith
