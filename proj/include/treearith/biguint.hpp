#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace treearith {

/// Unsigned integer of unbounded width. Supports exactly the operations the
/// tree-counting recurrence needs: addition, multiplication, exact division
/// by a machine word, and comparison.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // NOLINT: implicit by design

  BigUint& operator+=(const BigUint& rhs);
  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);

  BigUint& mul_small(std::uint64_t factor);

  /// Exact division by a nonzero word; the remainder must be zero.
  BigUint& div_exact_small(std::uint32_t divisor);

  /// -1, 0, or +1.
  int compare(const BigUint& rhs) const;
  friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
  friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
  friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }

  /// Narrowing accessor; throws Overflow if the value needs more than 64 bits.
  std::uint64_t to_u64() const;

  std::string to_string() const;

 private:
  void trim();

  // Base 2^32, little-endian, no trailing zero limbs. Empty means zero.
  std::vector<std::uint32_t> limbs_;
};

}  // namespace treearith
