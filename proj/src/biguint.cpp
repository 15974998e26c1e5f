#include "treearith/biguint.hpp"

#include <algorithm>

#include "treearith/errors.hpp"

namespace treearith {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
}

BigUint::BigUint(std::uint64_t value) {
  if (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
    if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum & 0xffffffffu);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
  BigUint out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry +
                          static_cast<std::uint64_t>(lhs.limbs_[i]) * rhs.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    out.limbs_[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  out.trim();
  return out;
}

BigUint& BigUint::mul_small(std::uint64_t factor) {
  *this = *this * BigUint(factor);
  return *this;
}

BigUint& BigUint::div_exact_small(std::uint32_t divisor) {
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = rem * kLimbBase + limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  if (rem != 0) throw Error("div_exact_small: division is not exact");
  trim();
  return *this;
}

int BigUint::compare(const BigUint& rhs) const {
  if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::uint64_t BigUint::to_u64() const {
  if (!fits_u64()) throw Overflow("value exceeds 64 bits");
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  // Repeated division by 10^9, emitting 9 decimal digits per round.
  std::vector<std::uint32_t> work = limbs_;
  std::string out;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = rem * kLimbBase + work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    std::string chunk = std::to_string(rem);
    if (!work.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
    out = chunk + out;
  }
  return out;
}

}  // namespace treearith
