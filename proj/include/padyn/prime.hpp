#pragma once

#include <cstdint>

#include "padyn/errors.hpp"
#include "padyn/rational.hpp"

namespace padyn {

/// A validated prime context. Construction runs a deterministic
/// Miller-Rabin test that is exact for all 64-bit inputs.
class Prime {
 public:
  explicit Prime(std::uint64_t p);

  std::uint64_t value() const { return p_; }
  BigInt big() const { return BigInt(p_); }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

 private:
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

}  // namespace padyn
