#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pmfgalois {

using Code = std::uint64_t;
using Digit = std::uint32_t;

// The finite base set {0, ..., size-1}.
class BaseSet {
 public:
  explicit BaseSet(unsigned size, bool allow_degenerate = false);

  unsigned size() const { return size_; }
  Code power(unsigned arity) const;

  friend bool operator==(const BaseSet&, const BaseSet&) = default;

 private:
  unsigned size_;
};

Code ipow(Code base, unsigned exponent);

// Big-endian: digit 0 is the most significant.
Code encode(std::span<const Digit> digits, unsigned base);
std::vector<Digit> decode(Code code, unsigned arity, unsigned base);
Digit digit_at(Code code, unsigned arity, unsigned index, unsigned base);

struct TupleCode {
  unsigned arity = 0;
  Code code = 0;

  friend bool operator==(const TupleCode&, const TupleCode&) = default;
  friend auto operator<=>(const TupleCode&, const TupleCode&) = default;
};

// Digits concatenated without separators, e.g. "011"; the empty tuple prints as "()".
std::string tuple_string(Code code, unsigned arity, unsigned base);

}  // namespace pmfgalois
