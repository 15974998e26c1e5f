#include "treearith/expr.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "treearith/arith.hpp"
#include "treearith/codec.hpp"
#include "treearith/errors.hpp"

namespace treearith {

namespace expr {

namespace {
ExprPtr make(Expr::Kind kind, SignedTree lit, std::int64_t k, ExprPtr l, ExprPtr r) {
  return std::make_shared<const Expr>(kind, std::move(lit), k, std::move(l), std::move(r));
}
}  // namespace

ExprPtr one() { return make(Expr::Kind::One, {}, 0, nullptr, nullptr); }

ExprPtr literal(const SignedTree& value) {
  if (value.is_one()) return one();
  if (value.negative()) return negate(literal(SignedTree(value.tree())));
  return make(Expr::Kind::Literal, value, 0, nullptr, nullptr);
}

ExprPtr add(ExprPtr l, ExprPtr r) { return make(Expr::Kind::Add, {}, 0, std::move(l), std::move(r)); }
ExprPtr sub(ExprPtr l, ExprPtr r) { return make(Expr::Kind::Sub, {}, 0, std::move(l), std::move(r)); }
ExprPtr mul(ExprPtr l, ExprPtr r) { return make(Expr::Kind::Mul, {}, 0, std::move(l), std::move(r)); }
ExprPtr div(ExprPtr l, ExprPtr r) { return make(Expr::Kind::Div, {}, 0, std::move(l), std::move(r)); }
ExprPtr stretch(ExprPtr e) { return make(Expr::Kind::Stretch, {}, 0, std::move(e), nullptr); }
ExprPtr unstretch(ExprPtr e) { return make(Expr::Kind::Unstretch, {}, 0, std::move(e), nullptr); }

ExprPtr scalar_mul(std::int64_t k, ExprPtr e) {
  return make(Expr::Kind::ScalarMul, {}, k, std::move(e), nullptr);
}
ExprPtr stretch_pow(std::int64_t k, ExprPtr e) {
  return make(Expr::Kind::StretchPow, {}, k, std::move(e), nullptr);
}
ExprPtr power(ExprPtr e, std::int64_t k) {
  return make(Expr::Kind::Power, {}, k, std::move(e), nullptr);
}
ExprPtr negate(ExprPtr e) { return make(Expr::Kind::Negate, {}, 0, std::move(e), nullptr); }

}  // namespace expr

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind() != b.kind() || a.scalar() != b.scalar()) return false;
  if (a.kind() == Expr::Kind::Literal && !(a.literal() == b.literal())) return false;
  if ((a.lhs() == nullptr) != (b.lhs() == nullptr)) return false;
  if (a.lhs() && !expr_equal(*a.lhs(), *b.lhs())) return false;
  if ((a.rhs() == nullptr) != (b.rhs() == nullptr)) return false;
  if (a.rhs() && !expr_equal(*a.rhs(), *b.rhs())) return false;
  return true;
}

ExprPtr decompose(const CanonTree& t) {
  if (t.size() == 1) return expr::one();
  const auto& kids = t.children();
  if (kids.size() == 1) return expr::stretch(decompose(kids.front()));
  // Split the last root subtree off: t = (t without it) + (a root over it).
  std::vector<CanonTree> head(kids.begin(), kids.end() - 1);
  return expr::add(decompose(CanonTree::node(std::move(head))),
                   expr::stretch(decompose(kids.back())));
}

SignedTree eval(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::One:
      return SignedTree(CanonTree::leaf());
    case Expr::Kind::Literal:
      return e.literal();
    case Expr::Kind::Add:
      return add(eval(*e.lhs()), eval(*e.rhs()));
    case Expr::Kind::Sub:
      return sub(eval(*e.lhs()), eval(*e.rhs()));
    case Expr::Kind::Mul:
      return mul(eval(*e.lhs()), eval(*e.rhs()));
    case Expr::Kind::Div:
      return div(eval(*e.lhs()), eval(*e.rhs()));
    case Expr::Kind::Stretch:
      return stretch(eval(*e.lhs()));
    case Expr::Kind::Unstretch:
      return unstretch(eval(*e.lhs()));
    case Expr::Kind::ScalarMul:
      return scalar_mul(e.scalar(), eval(*e.lhs()));
    case Expr::Kind::StretchPow:
      return stretch_pow(e.scalar(), eval(*e.lhs()));
    case Expr::Kind::Power:
      return power(eval(*e.lhs()), e.scalar());
    case Expr::Kind::Negate:
      return negate(eval(*e.lhs()));
  }
  throw Error("eval: corrupt expression node");
}

namespace {

struct Token {
  enum class Type { Int, RankLit, CodeLit, Plus, Minus, Star, StarStar, Slash, Caret, Underscore,
                    LParen, RParen, End };
  Type type;
  std::size_t pos = 0;
  std::uint64_t value = 0;   // Int, RankLit
  std::string text = {};     // CodeLit
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      std::size_t pos = i_;
      if (i_ >= text_.size()) {
        out.push_back({Token::Type::End, pos});
        return out;
      }
      char c = text_[i_];
      if (c == '+') { ++i_; out.push_back({Token::Type::Plus, pos}); continue; }
      if (c == '-') { ++i_; out.push_back({Token::Type::Minus, pos}); continue; }
      if (c == '/') { ++i_; out.push_back({Token::Type::Slash, pos}); continue; }
      if (c == '^') { ++i_; out.push_back({Token::Type::Caret, pos}); continue; }
      if (c == '_') { ++i_; out.push_back({Token::Type::Underscore, pos}); continue; }
      if (c == '(') { ++i_; out.push_back({Token::Type::LParen, pos}); continue; }
      if (c == ')') { ++i_; out.push_back({Token::Type::RParen, pos}); continue; }
      if (c == '*') {
        if (i_ + 1 < text_.size() && text_[i_ + 1] == '*') {
          i_ += 2;
          out.push_back({Token::Type::StarStar, pos});
        } else {
          ++i_;
          out.push_back({Token::Type::Star, pos});
        }
        continue;
      }
      if (c == '#') {
        ++i_;
        out.push_back({Token::Type::RankLit, pos, read_int(pos)});
        continue;
      }
      if (c == '"' || c == '\'') {
        char quote = c;
        ++i_;
        std::string bits;
        while (i_ < text_.size() && text_[i_] != quote) bits.push_back(text_[i_++]);
        if (i_ >= text_.size()) throw ParseError(pos, "unterminated code literal");
        ++i_;
        Token t{Token::Type::CodeLit, pos};
        t.text = std::move(bits);
        out.push_back(std::move(t));
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back({Token::Type::Int, pos, read_int(pos)});
        continue;
      }
      throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  std::uint64_t read_int(std::size_t at) {
    if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      throw ParseError(at, "expected an integer");
    }
    std::uint64_t v = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[i_] - '0');
      if (v > (1ull << 62)) throw ParseError(at, "integer literal too large");
      ++i_;
    }
    return v;
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

// expr    := term (('+'|'-') term)*
// term    := sfactor (('*'|'/') sfactor)*
// sfactor := INT '*' sfactor | INT '^' prefix | '-' sfactor | prefix
// prefix  := ('^' | '_') prefix | postfix
// postfix := primary ('**' INT)*
// primary := '#' INT | CODE | '(' expr ')'
class Parser {
 public:
  Parser(std::vector<Token> tokens, std::uint64_t cap) : tokens_(std::move(tokens)), cap_(cap) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    expect(Token::Type::End, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  Token take() { return tokens_[i_++]; }
  bool at(Token::Type t) const { return peek().type == t; }

  void expect(Token::Type t, const char* what) {
    if (!at(t)) throw ParseError(peek().pos, std::string("expected ") + what);
    ++i_;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (at(Token::Type::Plus) || at(Token::Type::Minus)) {
      bool plus = take().type == Token::Type::Plus;
      ExprPtr rhs = parse_term();
      lhs = plus ? expr::add(std::move(lhs), std::move(rhs))
                 : expr::sub(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_sfactor();
    while (at(Token::Type::Star) || at(Token::Type::Slash)) {
      bool star = take().type == Token::Type::Star;
      ExprPtr rhs = parse_sfactor();
      lhs = star ? expr::mul(std::move(lhs), std::move(rhs))
                 : expr::div(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  ExprPtr parse_sfactor() {
    // An integer is a coefficient when '*' or '^' follows; otherwise it is
    // left for parse_primary, where only 1 (the unit tree) is a literal.
    if (at(Token::Type::Int) &&
        (tokens_[i_ + 1].type == Token::Type::Star || tokens_[i_ + 1].type == Token::Type::Caret)) {
      Token k = take();
      if (k.value < 1) throw ParseError(k.pos, "scalar coefficient must be >= 1");
      if (at(Token::Type::Caret)) {
        take();
        return expr::stretch_pow(static_cast<std::int64_t>(k.value), parse_prefix());
      }
      take();  // '*'
      return expr::scalar_mul(static_cast<std::int64_t>(k.value), parse_sfactor());
    }
    if (at(Token::Type::Minus)) {
      take();
      return expr::negate(parse_sfactor());
    }
    return parse_prefix();
  }

  ExprPtr parse_prefix() {
    if (at(Token::Type::Caret)) {
      take();
      return expr::stretch(parse_prefix());
    }
    if (at(Token::Type::Underscore)) {
      take();
      return expr::unstretch(parse_prefix());
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    while (at(Token::Type::StarStar)) {
      Token op = take();
      if (!at(Token::Type::Int)) throw ParseError(peek().pos, "expected an integer exponent");
      Token k = take();
      if (k.value < 1) throw ParseError(k.pos, "exponent must be >= 1");
      (void)op;
      e = expr::power(std::move(e), static_cast<std::int64_t>(k.value));
    }
    return e;
  }

  ExprPtr parse_primary() {
    if (at(Token::Type::Int)) {
      Token t = take();
      if (t.value == 1) return expr::one();
      throw ParseError(t.pos, "only 1 denotes a tree; use #k or a quoted code");
    }
    if (at(Token::Type::RankLit)) {
      Token t = take();
      if (t.value < 1) throw ParseError(t.pos, "ranks are 1-based");
      try {
        return expr::literal(SignedTree(unrank(t.value, cap_)));
      } catch (const LimitExceeded& e) {
        throw ParseError(t.pos, std::string("rank out of reach: ") + e.what());
      }
    }
    if (at(Token::Type::CodeLit)) {
      Token t = take();
      try {
        return expr::literal(SignedTree(canonize(decode(t.text))));
      } catch (const DecodeError& e) {
        throw ParseError(t.pos, std::string("bad code literal: ") + e.what());
      }
    }
    if (at(Token::Type::LParen)) {
      take();
      ExprPtr e = parse_expr();
      expect(Token::Type::RParen, "')'");
      return e;
    }
    throw ParseError(peek().pos, "expected a literal or '('");
  }

  std::vector<Token> tokens_;
  std::uint64_t cap_;
  std::size_t i_ = 0;
};

// Higher binds tighter. Operands are rendered with the minimum precedence
// they must keep to reparse into the same shape.
enum Prec : int { kAdd = 1, kMul = 2, kScalar = 3, kPrefix = 4, kPower = 5, kPrimary = 6 };

int prec_of(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return kAdd;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return kMul;
    case Expr::Kind::ScalarMul:
    case Expr::Kind::Negate:
    case Expr::Kind::StretchPow:
      return kScalar;
    case Expr::Kind::Stretch:
    case Expr::Kind::Unstretch:
      return kPrefix;
    case Expr::Kind::Power:
      return kPower;
    case Expr::Kind::One:
    case Expr::Kind::Literal:
      return kPrimary;
  }
  return kPrimary;
}

void print_into(const Expr& e, int min_prec, std::string& out);

void print_child(const Expr& child, int min_prec, std::string& out) {
  if (prec_of(child) < min_prec) {
    out.push_back('(');
    print_into(child, kAdd, out);
    out.push_back(')');
  } else {
    print_into(child, min_prec, out);
  }
}


void print_into(const Expr& e, int /*min_prec*/, std::string& out) {
  switch (e.kind()) {
    case Expr::Kind::One:
      out += "#1";
      return;
    case Expr::Kind::Literal:
      out.push_back('"');
      out += encode(e.literal().tree());
      out.push_back('"');
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      print_child(*e.lhs(), kAdd, out);
      out.push_back(e.kind() == Expr::Kind::Add ? '+' : '-');
      print_child(*e.rhs(), kMul, out);
      return;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      print_child(*e.lhs(), kMul, out);
      out.push_back(e.kind() == Expr::Kind::Mul ? '*' : '/');
      print_child(*e.rhs(), kScalar, out);
      return;
    case Expr::Kind::ScalarMul:
      out += std::to_string(e.scalar());
      out.push_back('*');
      print_child(*e.lhs(), kScalar, out);
      return;
    case Expr::Kind::Stretch:
      out.push_back('^');
      print_child(*e.lhs(), kPrefix, out);
      return;
    case Expr::Kind::StretchPow:
      out += std::to_string(e.scalar());
      out.push_back('^');
      print_child(*e.lhs(), kPrefix, out);
      return;
    case Expr::Kind::Unstretch:
      out.push_back('_');
      print_child(*e.lhs(), kPrefix, out);
      return;
    case Expr::Kind::Negate:
      out.push_back('-');
      print_child(*e.lhs(), kScalar, out);
      return;
    case Expr::Kind::Power:
      print_child(*e.lhs(), kPower, out);
      out += "**";
      out += std::to_string(e.scalar());
      return;
  }
}

}  // namespace

ExprPtr parse_expr(std::string_view text, std::uint64_t cap) {
  return Parser(Lexer(text).run(), cap).run();
}

std::string print_expr(const Expr& e) {
  std::string out;
  print_into(e, kAdd, out);
  return out;
}

}  // namespace treearith
