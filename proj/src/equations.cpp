#include "treearith/equations.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "treearith/arith.hpp"
#include "treearith/codec.hpp"
#include "treearith/errors.hpp"

namespace treearith {

std::vector<ShapeClass> shape_classes(const CanonTree& t) {
  std::vector<ShapeClass> out;
  for (const CanonTree& c : t.children()) {
    if (!out.empty() && out.back().shape == c) {
      ++out.back().count;
    } else {
      out.push_back({c, 1});
    }
  }
  return out;
}

namespace {

// ax + by = gcd(a, b) with iterative extended Euclid.
struct Xgcd {
  std::int64_t g, x, y;
};

Xgcd xgcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  // den > 0
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

// Smallest non-negative (x, y) with a*x - b*y = c, c >= 0. Requires
// gcd(a, b) | c.
std::pair<std::int64_t, std::int64_t> min_nonneg_pair(std::int64_t a, std::int64_t b,
                                                      std::int64_t c) {
  Xgcd e = xgcd(a, b);
  std::int64_t ap = a / e.g;
  std::int64_t bp = b / e.g;
  std::int64_t cp = c / e.g;
  // a*(x0) - b*(y0) = c with x = x0 + bp*t, y = y0 + ap*t.
  std::int64_t x0 = e.x * cp;
  std::int64_t y0 = -e.y * cp;
  std::int64_t t = std::max(ceil_div(-x0, bp), ceil_div(-y0, ap));
  return {x0 + bp * t, y0 + ap * t};
}

CanonTree build_from_multiplicities(const std::vector<ShapeClass>& classes,
                                    const std::vector<std::int64_t>& mult) {
  std::vector<CanonTree> kids;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::int64_t j = 0; j < mult[i]; ++j) kids.push_back(classes[i].shape);
  }
  return CanonTree::node(std::move(kids));
}

void verify_solution(std::int64_t a, std::int64_t b, const SignedTree& c,
                     const LinearSolution& sol) {
  SignedTree total = scalar_mul(a, sol.x);
  if (sol.y) total = add(total, scalar_mul(b, *sol.y));
  total = add(total, c);
  if (!total.is_one()) throw Error("internal: solver produced a non-solution");
}

// Same-sign splitting: every class cardinality c must be g*a + h*b with
// g, h >= 0. h is kept minimal per class; if that leaves Y empty, the first
// class that can donate positively to Y does so.
std::optional<LinearSolution> try_same_sign(std::int64_t a, std::int64_t b, const SignedTree& c,
                                            const std::vector<ShapeClass>& classes,
                                            std::string& why_not) {
  std::vector<std::int64_t> g(classes.size(), 0);
  std::vector<std::int64_t> h(classes.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    bool found = false;
    for (std::int64_t hh = 0; hh * b <= classes[i].count; ++hh) {
      if ((classes[i].count - hh * b) % a == 0) {
        h[i] = hh;
        g[i] = (classes[i].count - hh * b) / a;
        found = true;
        break;
      }
    }
    if (!found) {
      why_not += "class " + encode(classes[i].shape) + ": cardinality " +
                 std::to_string(classes[i].count) + " is not g*" + std::to_string(a) + " + h*" +
                 std::to_string(b) + " for any g,h >= 0; ";
      return std::nullopt;
    }
  }
  if (std::all_of(h.begin(), h.end(), [](std::int64_t v) { return v == 0; })) {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::int64_t hh = 1; hh * b <= classes[i].count; ++hh) {
        if ((classes[i].count - hh * b) % a == 0) {
          h[i] = hh;
          g[i] = (classes[i].count - hh * b) / a;
          break;
        }
      }
      if (h[i] > 0) break;
    }
  }

  LinearSolution sol;
  bool sign = !c.negative();  // X, Y carry the sign opposite to C
  sol.x = SignedTree(build_from_multiplicities(classes, g), sign);
  sol.y = SignedTree(build_from_multiplicities(classes, h), sign);
  sol.condition = LinearSolution::Condition::kSameSign;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    sol.classes.push_back({classes[i].shape, classes[i].count, g[i], h[i]});
    if (g[i] > 0 && h[i] > 0) sol.split_shared_class = true;
  }
  sol.x_is_one = sol.x.is_one();
  sol.y_is_one = sol.y->is_one();
  return sol;
}

// Opposite signs. The major unknown (coefficient `major`) has the sign
// opposite to C and absorbs the trailing classes outright; the classes up to
// the last one not divisible by `major` are settled with extended gcd.
std::optional<LinearSolution> try_opposite(std::int64_t major, std::int64_t minor,
                                           const SignedTree& c,
                                           const std::vector<ShapeClass>& classes, bool x_major,
                                           std::string& why_not) {
  std::size_t split = 0;  // classes [0, split) get the two-term treatment
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].count % major != 0) split = i + 1;
  }
  std::int64_t g = std::gcd(major, minor);
  std::vector<std::int64_t> maj_mult(classes.size(), 0);
  std::vector<std::int64_t> min_mult(classes.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i < split) {
      if (classes[i].count % g != 0) {
        why_not += "class " + encode(classes[i].shape) + ": cardinality " +
                   std::to_string(classes[i].count) + " is not divisible by gcd(" +
                   std::to_string(major) + "," + std::to_string(minor) + ") = " +
                   std::to_string(g) + "; ";
        return std::nullopt;
      }
      auto [mj, mn] = min_nonneg_pair(major, minor, classes[i].count);
      maj_mult[i] = mj;
      min_mult[i] = mn;
    } else {
      maj_mult[i] = classes[i].count / major;
    }
  }

  LinearSolution sol;
  bool major_sign = !c.negative();
  SignedTree major_tree(build_from_multiplicities(classes, maj_mult), major_sign);
  SignedTree minor_tree(build_from_multiplicities(classes, min_mult), !major_sign);
  sol.condition = x_major ? LinearSolution::Condition::kOppositeXMajor
                          : LinearSolution::Condition::kOppositeYMajor;
  sol.x = x_major ? major_tree : minor_tree;
  sol.y = x_major ? minor_tree : major_tree;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    sol.classes.push_back({classes[i].shape, classes[i].count,
                           x_major ? maj_mult[i] : min_mult[i],
                           x_major ? min_mult[i] : maj_mult[i]});
  }
  sol.x_is_one = sol.x.is_one();
  sol.y_is_one = sol.y->is_one();
  return sol;
}

}  // namespace

namespace {
void check_coefficient(std::int64_t v) {
  if (v < 1) throw Error("solve: coefficients must be >= 1");
  if (v > 1'000'000'000) throw Error("solve: coefficients above 1e9 are not supported");
}
}  // namespace

LinearSolution solve_linear_one_unknown(std::int64_t a, const SignedTree& c) {
  check_coefficient(a);
  auto classes = shape_classes(c.tree());
  std::string why_not;
  std::vector<std::int64_t> mult(classes.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].count % a != 0) {
      why_not += "class " + encode(classes[i].shape) + ": cardinality " +
                 std::to_string(classes[i].count) + " is not divisible by " + std::to_string(a) +
                 "; ";
      continue;
    }
    mult[i] = classes[i].count / a;
  }
  if (!why_not.empty()) throw NoSolution("no solution: " + why_not);

  LinearSolution sol;
  sol.x = SignedTree(build_from_multiplicities(classes, mult), !c.negative());
  sol.condition = LinearSolution::Condition::kSingleUnknown;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    sol.classes.push_back({classes[i].shape, classes[i].count, mult[i], 0});
  }
  sol.x_is_one = sol.x.is_one();

  SignedTree total = add(scalar_mul(a, sol.x), c);
  if (!total.is_one()) throw Error("internal: solver produced a non-solution");
  return sol;
}

LinearSolution solve_linear_two_unknowns(std::int64_t a, std::int64_t b, const SignedTree& c) {
  check_coefficient(a);
  check_coefficient(b);
  auto classes = shape_classes(c.tree());
  std::string why_not;
  if (auto sol = try_same_sign(a, b, c, classes, why_not)) {
    verify_solution(a, b, c, *sol);
    return *sol;
  }
  if (auto sol = try_opposite(a, b, c, classes, /*x_major=*/true, why_not)) {
    verify_solution(a, b, c, *sol);
    return *sol;
  }
  if (auto sol = try_opposite(b, a, c, classes, /*x_major=*/false, why_not)) {
    verify_solution(a, b, c, *sol);
    return *sol;
  }
  throw NoSolution("no solution: " + why_not);
}

QuadraticWitnesses quadratic_vertex_witnesses(std::int64_t a, std::int64_t b,
                                              const SignedTree& c) {
  if (a < 1 || b < 1) throw Error("coefficients must be >= 1");
  QuadraticWitnesses out;
  std::int64_t rhs = c.size() + a + b - 1;
  for (std::int64_t nx = 1; a * nx * nx + b <= rhs; ++nx) {
    std::int64_t rem = rhs - a * nx * nx;
    if (rem % b == 0) out.pairs.emplace_back(nx, rem / b);
  }
  out.feasible = !out.pairs.empty();
  return out;
}

std::vector<std::array<std::int64_t, 3>> quasi_pythagorean(std::int64_t limit) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t x = 1; x <= limit; ++x) {
    for (std::int64_t y = x; y <= limit; ++y) {
      for (std::int64_t z = y; z <= limit; ++z) {
        if (x * x + y * y - 1 == z * z) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

}  // namespace treearith
