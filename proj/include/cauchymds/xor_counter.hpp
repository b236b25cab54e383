#pragma once

#include <cstdint>

namespace cauchymds {

// Tally of single-bit XORs between two operands that may both be nonzero.
// Counting-path operations bump it; it never decreases. Use one counter per
// thread of work.
class XorCounter {
 public:
  XorCounter() = default;

  void add(std::uint64_t n) { count_ += n; }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_ = 0;
};

}  // namespace cauchymds
