#include "pmfgalois/tuple_code.hpp"

#include <cstdlib>
#include <limits>

#include "pmfgalois/config.hpp"
#include "pmfgalois/error.hpp"

namespace pmfgalois {

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("PMFGALOIS_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return fallback;
  return v;
}

BaseSet::BaseSet(unsigned size, bool allow_degenerate) : size_(size) {
  if (size > kMaxBase) {
    throw ShapeError("base size " + std::to_string(size) + " exceeds cap " +
                     std::to_string(kMaxBase));
  }
  if (size < 2 && !allow_degenerate) {
    throw ShapeError("base size " + std::to_string(size) +
                     " requires the degenerate-base flag");
  }
}

Code BaseSet::power(unsigned arity) const { return ipow(size_, arity); }

Code ipow(Code base, unsigned exponent) {
  Code r = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && r > std::numeric_limits<Code>::max() / base) {
      throw RangeError("integer power overflow");
    }
    r *= base;
  }
  return r;
}

Code encode(std::span<const Digit> digits, unsigned base) {
  Code c = 0;
  for (Digit d : digits) {
    if (d >= base) throw RangeError("tuple digit " + std::to_string(d) + " outside base");
    c = c * base + d;
  }
  return c;
}

std::vector<Digit> decode(Code code, unsigned arity, unsigned base) {
  std::vector<Digit> out(arity, 0);
  for (unsigned i = arity; i-- > 0;) {
    out[i] = static_cast<Digit>(code % base);
    code /= base;
  }
  if (code != 0) throw RangeError("tuple code out of range for arity");
  return out;
}

Digit digit_at(Code code, unsigned arity, unsigned index, unsigned base) {
  if (index >= arity) throw RangeError("tuple index out of range");
  for (unsigned i = arity - 1; i > index; --i) code /= base;
  return static_cast<Digit>(code % base);
}

std::string tuple_string(Code code, unsigned arity, unsigned base) {
  if (arity == 0) return "()";
  std::string s;
  for (Digit d : decode(code, arity, base)) s += static_cast<char>('0' + d);
  return s;
}

}  // namespace pmfgalois
