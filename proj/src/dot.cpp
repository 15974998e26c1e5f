#include "treearith/dot.hpp"

#include <sstream>

namespace treearith {

namespace {

void walk(const CanonTree& t, bool negative, int parent, int& next, std::ostringstream& out) {
  int id = next++;
  out << "  v" << id << " [style=" << (negative && parent >= 0 ? "solid" : "filled") << "];\n";
  if (parent >= 0) out << "  v" << parent << " -> v" << id << ";\n";
  for (const CanonTree& c : t.children()) walk(c, negative, id, next, out);
}

}  // namespace

std::string emit_dot(const SignedTree& t) {
  std::ostringstream out;
  out << "digraph tree {\n";
  out << "  ordering=out;\n";
  out << "  node [shape=circle, label=\"\", width=0.15, fixedsize=true, fillcolor=black];\n";
  int next = 0;
  walk(t.tree(), t.negative(), -1, next, out);
  out << "}\n";
  return out.str();
}

}  // namespace treearith
