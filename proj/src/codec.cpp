#include "treearith/codec.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "treearith/errors.hpp"

namespace treearith {

RawTree decode(std::string_view code) {
  // Bit positions in the original string, so error positions survive
  // whitespace stripping.
  std::vector<std::pair<char, std::size_t>> bits;
  bits.reserve(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    char c = code[i];
    if (c == '0' || c == '1') {
      bits.emplace_back(c, i);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw DecodeError(i, std::string("unexpected character '") + c + "'");
    }
  }
  if (bits.empty()) throw DecodeError(0, "empty code");
  if (bits.size() % 2 != 0) {
    throw DecodeError(code.size(), "odd number of bits (" + std::to_string(bits.size()) + ")");
  }

  RawTree root;
  std::vector<RawTree*> stack;
  std::int64_t balance = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    auto [bit, pos] = bits[i];
    if (balance == 0 && i > 0) {
      // The root closed but input remains: the prefix rule is violated here.
      throw DecodeError(pos, "prefix balance reached zero before the end of the code");
    }
    if (bit == '1') {
      ++balance;
      if (stack.empty()) {
        stack.push_back(&root);
      } else {
        stack.back()->children.emplace_back();
        stack.push_back(&stack.back()->children.back());
      }
    } else {
      --balance;
      if (balance < 0) throw DecodeError(pos, "more 0s than 1s");
      stack.pop_back();
    }
  }
  if (balance != 0) {
    throw DecodeError(code.size(),
                      std::to_string(balance) + " vertex(es) left open at the end of the code");
  }
  return root;
}

namespace {

void encode_into(const CanonTree& t, std::string& out) {
  out.push_back('1');
  for (const CanonTree& c : t.children()) encode_into(c, out);
  out.push_back('0');
}

CanonTree canonize_rec(const RawTree& t) {
  std::vector<CanonTree> kids;
  kids.reserve(t.children.size());
  for (const RawTree& c : t.children) kids.push_back(canonize_rec(c));
  return CanonTree::node(std::move(kids));
}

}  // namespace

TreeCode encode(const CanonTree& t) {
  std::string out;
  out.reserve(static_cast<std::size_t>(2 * t.size()));
  encode_into(t, out);
  return out;
}

CanonTree canonize(const RawTree& t) { return canonize_rec(t); }

Measures measures(const CanonTree& t) { return {t.size(), t.leaves(), t.root_degree()}; }

bool code_binary_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace treearith
