// Command-line front end for the tree arithmetic library.
//
// Exit codes: 0 success, 2 syntax/usage/decode errors, 3 undefined tree
// operations and unsolvable equations, 4 caps and overflows, 1 anything else.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "treearith/arith.hpp"
#include "treearith/codec.hpp"
#include "treearith/dot.hpp"
#include "treearith/enumerate.hpp"
#include "treearith/equations.hpp"
#include "treearith/errors.hpp"
#include "treearith/expr.hpp"
#include "treearith/prime.hpp"
#include "treearith/tree.hpp"

namespace {

using treearith::CanonTree;
using treearith::SignedTree;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitSyntax = 2;
constexpr int kExitUndefined = 3;
constexpr int kExitLimit = 4;

struct Options {
  std::string format = "code";
  std::uint64_t cap = treearith::kDefaultFamilyCap;
  bool neg = false;
};

std::uint64_t env_cap() {
  if (const char* env = std::getenv("TREEARITH_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "error: usage: TREEARITH_CAP must be a positive integer\n";
    std::exit(kExitSyntax);
  }
  return treearith::kDefaultFamilyCap;
}

/// #rank when the family is materializable under the cap, else the code.
std::string rank_or_code(const CanonTree& t, std::uint64_t cap) {
  try {
    return "#" + std::to_string(treearith::rank_of(t, cap).index);
  } catch (const treearith::LimitExceeded&) {
    return treearith::encode(t);
  }
}

std::optional<std::uint64_t> try_rank(const CanonTree& t, std::uint64_t cap) {
  try {
    return treearith::rank_of(t, cap).index;
  } catch (const treearith::LimitExceeded&) {
    return std::nullopt;
  }
}

void print_tree_result(const std::string& input, const SignedTree& value, const Options& opt) {
  std::string sign = value.negative() ? "-" : "";
  if (opt.format == "code") {
    std::cout << sign << treearith::encode(value.tree()) << "\n";
  } else if (opt.format == "rank") {
    auto r = try_rank(value.tree(), opt.cap);
    if (!r) {
      throw treearith::LimitExceeded("rank not computable under the cap; use --format code");
    }
    std::cout << sign << *r << "\n";
  } else if (opt.format == "dot") {
    std::cout << treearith::emit_dot(value);
  } else if (opt.format == "json") {
    json out;
    out["input"] = input;
    out["result_code"] = treearith::encode(value.tree());
    if (auto r = try_rank(value.tree(), opt.cap)) out["result_rank"] = *r;
    if (value.negative()) out["negative"] = true;
    std::cout << out.dump() << "\n";
  } else {
    throw treearith::Error("usage: unknown format '" + opt.format + "'");
  }
}

SignedTree eval_input(const std::string& text, const Options& opt) {
  // A standalone code needs no quoting: an argument of two or more bits and
  // nothing else is decoded directly. Inside larger expressions codes stay
  // quoted; a lone "1" is the unit tree.
  int bits = 0;
  bool bits_only = true;
  for (char c : text) {
    if (c == '0' || c == '1') {
      ++bits;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      bits_only = false;
      break;
    }
  }
  SignedTree v = bits_only && bits >= 2
                     ? SignedTree(treearith::canonize(treearith::decode(text)))
                     : treearith::eval(*treearith::parse_expr(text, opt.cap));
  return opt.neg ? treearith::negate(v) : v;
}

const char* condition_name(treearith::LinearSolution::Condition c) {
  using Condition = treearith::LinearSolution::Condition;
  switch (c) {
    case Condition::kSingleUnknown: return "single-unknown";
    case Condition::kSameSign: return "same-sign";
    case Condition::kOppositeXMajor: return "opposite-sign-x-major";
    case Condition::kOppositeYMajor: return "opposite-sign-y-major";
  }
  return "?";
}

void print_solution(const std::string& input, const treearith::LinearSolution& sol,
                    const Options& opt) {
  if (opt.format == "json") {
    json out;
    out["input"] = input;
    out["condition"] = condition_name(sol.condition);
    out["x_code"] = treearith::encode(sol.x.tree());
    out["x_negative"] = sol.x.negative();
    if (sol.y) {
      out["y_code"] = treearith::encode(sol.y->tree());
      out["y_negative"] = sol.y->negative();
    }
    out["split_shared_class"] = sol.split_shared_class;
    out["degenerate_x"] = sol.x_is_one;
    out["degenerate_y"] = sol.y_is_one;
    json classes = json::array();
    for (const auto& cl : sol.classes) {
      classes.push_back({{"shape", treearith::encode(cl.shape)},
                         {"c", cl.c},
                         {"x", cl.x},
                         {"y", cl.y}});
    }
    out["classes"] = classes;
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "X = " << (sol.x.negative() ? "-" : "") << treearith::encode(sol.x.tree()) << "\n";
  if (sol.y) {
    std::cout << "Y = " << (sol.y->negative() ? "-" : "") << treearith::encode(sol.y->tree())
              << "\n";
  }
  std::cout << "condition = " << condition_name(sol.condition) << "\n";
  for (const auto& cl : sol.classes) {
    std::cout << "class " << treearith::encode(cl.shape) << ": c=" << cl.c << " x=" << cl.x
              << " y=" << cl.y << "\n";
  }
  if (sol.split_shared_class) std::cout << "note: a shape class was split between X and Y\n";
  if (sol.x_is_one) std::cout << "note: X is the single-vertex tree (degenerate)\n";
  if (sol.y && sol.y_is_one) std::cout << "note: Y is the single-vertex tree (degenerate)\n";
}

// Forms: "2x+C=1", "ax+C=1", "2x+3y+C=1", "ax+by+C=1" (spaces allowed).
struct SolveForm {
  bool two_unknowns = false;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
};

SolveForm parse_solve_form(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  SolveForm form;
  std::size_t i = 0;
  auto read_coef = [&](char letter) -> std::optional<std::int64_t> {
    if (i < s.size() && s[i] == letter) {
      ++i;
      return std::nullopt;  // symbolic: value comes from the flag
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw treearith::Error("usage: malformed equation form '" + raw + "'");
    return std::stoll(s.substr(start, i - start));
  };
  form.a = read_coef('a');
  if (i >= s.size() || s[i] != 'x') throw treearith::Error("usage: expected 'x' in '" + raw + "'");
  ++i;
  if (i < s.size() && s[i] == '+' && i + 1 < s.size() && s[i + 1] != 'C') {
    ++i;
    form.two_unknowns = true;
    form.b = read_coef('b');
    if (i >= s.size() || s[i] != 'y') {
      throw treearith::Error("usage: expected 'y' in '" + raw + "'");
    }
    ++i;
  }
  if (s.substr(i) != "+C=1") {
    throw treearith::Error("usage: equation form must end in '+C=1', got '" + raw + "'");
  }
  return form;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"arithmetic on non-empty rooted unordered trees"};
  app.require_subcommand(1);

  Options opt;
  opt.cap = env_cap();
  app.add_option("--format", opt.format, "output format: code, rank, dot or json")
      ->capture_default_str();
  app.add_option("--cap", opt.cap, "largest family cardinality that may be materialized")
      ->capture_default_str();
  app.add_flag("--neg", opt.neg, "negate the evaluated input");

  std::string arg_code, arg_expr, arg_form, arg_c;
  std::uint64_t arg_index = 0;
  int arg_n = 0;
  bool use_add = false, use_mult = false;
  std::int64_t flag_a = 0, flag_b = 0;

  // Global flags (--format, --cap, --neg) may appear after the subcommand.
  auto subcommand = [&app](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  CLI::App* canon = subcommand("canon", "canonical code of a possibly non-canonical code");
  canon->add_option("code", arg_code)->required();

  CLI::App* decode_cmd = subcommand("decode", "validate a code and report its measures");
  decode_cmd->add_option("code", arg_code)->required();

  CLI::App* encode_cmd = subcommand("encode", "evaluate an expression and print its code");
  encode_cmd->add_option("expr", arg_expr)->required();

  CLI::App* eval_cmd = subcommand("eval", "evaluate an expression");
  eval_cmd->add_option("expr", arg_expr)->required();

  CLI::App* rank_cmd = subcommand("rank", "global index of an expression's value");
  rank_cmd->add_option("expr", arg_expr)->required();

  CLI::App* unrank_cmd = subcommand("unrank", "tree code at a global index");
  unrank_cmd->add_option("index", arg_index)->required();

  CLI::App* list_cmd = subcommand("list", "all codes with n vertices, ascending");
  list_cmd->add_option("n", arg_n)->required();

  CLI::App* count_cmd = subcommand("count", "number of trees with n vertices");
  count_cmd->add_option("n", arg_n)->required();

  CLI::App* decompose_cmd = subcommand("decompose", "write a tree over the single generator");
  decompose_cmd->add_option("expr", arg_expr)->required();

  CLI::App* isprime_cmd = subcommand("isprime", "primality of an expression's value");
  isprime_cmd->add_option("expr", arg_expr)->required();
  isprime_cmd->add_flag("--add", use_add, "additive primality");
  isprime_cmd->add_flag("--mult", use_mult, "multiplicative primality");

  CLI::App* factor_cmd = subcommand("factor", "factorization of an expression's value");
  factor_cmd->add_option("expr", arg_expr)->required();
  factor_cmd->add_flag("--add", use_add, "additive factorization");
  factor_cmd->add_flag("--mult", use_mult, "multiplicative factorization");

  CLI::App* solve_cmd = subcommand("solve", "solve a linear tree equation");
  solve_cmd->add_option("form", arg_form, "equation form, e.g. '2x+C=1' or 'ax+by+C=1'")
      ->required();
  solve_cmd->add_option("--C", arg_c, "code of the constant tree C")->required();
  solve_cmd->add_option("--a", flag_a, "coefficient a when the form uses the letter");
  solve_cmd->add_option("--b", flag_b, "coefficient b when the form uses the letter");

  CLI::App* dot_cmd = subcommand("dot", "Graphviz rendering of an expression's value");
  dot_cmd->add_option("expr", arg_expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitSyntax;
  }

  if (canon->parsed()) {
    SignedTree t(treearith::canonize(treearith::decode(arg_code)));
    print_tree_result(arg_code, opt.neg ? treearith::negate(t) : t, opt);
    return kExitOk;
  }

  if (decode_cmd->parsed()) {
    CanonTree t = treearith::canonize(treearith::decode(arg_code));
    treearith::Measures m = treearith::measures(t);
    std::string canonical = treearith::encode(t);
    std::string stripped;
    for (char c : arg_code) {
      if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
    }
    if (opt.format == "json") {
      json out;
      out["input"] = arg_code;
      out["result_code"] = canonical;
      out["vertices"] = m.vertices;
      out["leaves"] = m.leaves;
      out["root_degree"] = m.root_degree;
      out["canonical"] = stripped == canonical;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "vertices=" << m.vertices << " leaves=" << m.leaves
                << " root_degree=" << m.root_degree << " canonical="
                << (stripped == canonical ? "true" : "false") << " code=" << canonical << "\n";
    }
    return kExitOk;
  }

  if (encode_cmd->parsed() || eval_cmd->parsed() || dot_cmd->parsed()) {
    Options local = opt;
    if (dot_cmd->parsed()) local.format = "dot";
    print_tree_result(arg_expr, eval_input(arg_expr, opt), local);
    return kExitOk;
  }

  if (rank_cmd->parsed()) {
    SignedTree v = eval_input(arg_expr, opt);
    std::cout << (v.negative() ? "-" : "") << treearith::rank_of(v.tree(), opt.cap).index << "\n";
    return kExitOk;
  }

  if (unrank_cmd->parsed()) {
    if (arg_index < 1) throw treearith::Error("usage: indices are 1-based");
    SignedTree t(treearith::unrank(arg_index, opt.cap));
    print_tree_result(std::to_string(arg_index), opt.neg ? treearith::negate(t) : t, opt);
    return kExitOk;
  }

  if (list_cmd->parsed()) {
    if (arg_n < 1) throw treearith::Error("usage: the vertex count must be >= 1");
    for (const CanonTree& t : treearith::family(arg_n, opt.cap)) {
      std::cout << treearith::encode(t) << "\n";
    }
    return kExitOk;
  }

  if (count_cmd->parsed()) {
    if (arg_n < 1) throw treearith::Error("usage: the vertex count must be >= 1");
    std::cout << treearith::tree_count(arg_n).to_string() << "\n";
    return kExitOk;
  }

  if (decompose_cmd->parsed()) {
    SignedTree v = eval_input(arg_expr, opt);
    if (v.negative()) {
      throw treearith::UndefinedOperation(
          "decomposition over the single generator is defined for positive trees");
    }
    treearith::ExprPtr e = treearith::decompose(v.tree());
    std::string text = treearith::print_expr(*e);
    if (opt.format == "json") {
      json out;
      out["input"] = arg_expr;
      out["result_code"] = treearith::encode(v.tree());
      out["steps"] = text;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
    return kExitOk;
  }

  if (isprime_cmd->parsed()) {
    if (use_add == use_mult) {
      throw treearith::Error("usage: isprime needs exactly one of --add or --mult");
    }
    SignedTree v = eval_input(arg_expr, opt);
    bool prime = use_add ? treearith::is_add_prime(v.tree()) : treearith::is_mult_prime(v.tree());
    std::cout << (prime ? "true" : "false") << "\n";
    return kExitOk;
  }

  if (factor_cmd->parsed()) {
    if (use_add == use_mult) {
      throw treearith::Error("usage: factor needs exactly one of --add or --mult");
    }
    SignedTree v = eval_input(arg_expr, opt);
    std::vector<CanonTree> factors = use_add ? treearith::add_factorize(v.tree())
                                             : treearith::mult_factorize(v.tree());
    std::string sep;
    for (const CanonTree& f : factors) {
      std::cout << sep << rank_or_code(f, opt.cap);
      sep = " ";
    }
    std::cout << "\n";
    return kExitOk;
  }

  if (solve_cmd->parsed()) {
    SolveForm form = parse_solve_form(arg_form);
    std::int64_t a = form.a ? *form.a : flag_a;
    std::int64_t b = form.b ? *form.b : flag_b;
    if (a < 1 || (form.two_unknowns && b < 1)) {
      throw treearith::Error("usage: coefficients must be >= 1 (use --a/--b with symbolic forms)");
    }
    SignedTree c(treearith::canonize(treearith::decode(arg_c)), opt.neg);
    treearith::LinearSolution sol = form.two_unknowns
                                        ? treearith::solve_linear_two_unknowns(a, b, c)
                                        : treearith::solve_linear_one_unknown(a, c);
    print_solution(arg_form, sol, opt);
    return kExitOk;
  }

  throw treearith::Error("usage: no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const treearith::DecodeError& e) {
    std::cerr << "error: decode: " << e.what() << "\n";
    return kExitSyntax;
  } catch (const treearith::ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kExitSyntax;
  } catch (const treearith::NoSolution& e) {
    std::cerr << "error: unsolvable: " << e.what() << "\n";
    return kExitUndefined;
  } catch (const treearith::UndefinedOperation& e) {
    std::cerr << "error: undefined: " << e.what() << "\n";
    return kExitUndefined;
  } catch (const treearith::LimitExceeded& e) {
    std::cerr << "error: limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const treearith::Overflow& e) {
    std::cerr << "error: overflow: " << e.what() << "\n";
    return kExitLimit;
  } catch (const treearith::Error& e) {
    std::string what = e.what();
    if (what.rfind("usage:", 0) == 0) {
      std::cerr << "error: " << what << "\n";
      return kExitSyntax;
    }
    std::cerr << "error: " << what << "\n";
    return kExitOther;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
}
