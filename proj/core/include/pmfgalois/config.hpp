#pragma once

#include <cstddef>
#include <cstdint>

namespace pmfgalois {

inline constexpr unsigned kMaxBase = 4;
inline constexpr unsigned kMaxTotalArity = 12;
inline constexpr std::size_t kDefaultMonoidCap = 64;
inline constexpr std::uint64_t kDefaultBudget = 4'000'000'000ULL;

struct Caps {
  unsigned n_max = 2;
  unsigned m_max = 2;
  unsigned k_max = 4;

  friend bool operator==(const Caps&, const Caps&) = default;
};

// Reads PMFGALOIS_BUDGET; falls back when unset or unparsable.
std::uint64_t budget_from_env(std::uint64_t fallback = kDefaultBudget);

// Saturation threshold large enough that no product under the caps saturates.
inline unsigned default_nat_threshold(const Caps& caps) {
  unsigned arity = caps.n_max > caps.m_max ? caps.n_max : caps.m_max;
  return arity * caps.k_max + 1;
}

}  // namespace pmfgalois
