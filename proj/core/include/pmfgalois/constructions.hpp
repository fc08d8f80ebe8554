#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmfgalois/pomonoid.hpp"
#include "pmfgalois/semiring.hpp"
#include "pmfgalois/weight.hpp"

namespace pmfgalois {

// ---------------------------------------------------------------------------
// Down-set completion

inline constexpr std::size_t kDownsetCarrierCap = 16;
inline constexpr std::size_t kDownsetSizeCap = 1024;

struct DownsetCompletion {
  SemiringPtr semiring;
  std::vector<std::uint64_t> sets;  // element -> bitmask over M
  std::vector<Elem> embedding;      // x -> index of the principal down-set of x
};

// Down-sets of M ordered by size, then mask; empty set is the zero.
DownsetCompletion downset_completion(const FinitePomonoid& m, std::size_t cap = kDownsetSizeCap);
// The weight x -> w(x) down-closed, into the completion of its target.
Weight lift_to_downsets(const Weight& w, std::size_t cap = kDownsetSizeCap);

// ---------------------------------------------------------------------------
// Formal sums N[M]

inline constexpr std::size_t kUpsetCarrierCap = 14;

struct FormalSum {
  std::vector<unsigned> mult;  // multiplicity per element of M

  friend bool operator==(const FormalSum&, const FormalSum&) = default;
};

// Formal sums over M with multiplicities saturating at the threshold.
class FormalSumAlgebra {
 public:
  FormalSumAlgebra(PomonoidPtr m, unsigned threshold);

  const FinitePomonoid& monoid() const { return *m_; }
  unsigned threshold() const { return threshold_; }
  const std::vector<std::uint64_t>& upsets() const { return upsets_; }

  FormalSum zero() const;
  FormalSum one() const;
  FormalSum singleton(Elem x) const;
  FormalSum add(const FormalSum& a, const FormalSum& b) const;
  FormalSum mul(const FormalSum& a, const FormalSum& b) const;
  // For every up-set U, the multiplicity sum of a over U is at most that of b.
  bool leq(const FormalSum& a, const FormalSum& b) const;
  bool saturated(const FormalSum& a) const;

 private:
  unsigned sat_add(unsigned a, unsigned b) const;

  PomonoidPtr m_;
  unsigned threshold_;
  std::vector<std::uint64_t> upsets_;
};

bool formal_sum_leq(const PomonoidPtr& m, const FormalSum& x, const FormalSum& y);

// ---------------------------------------------------------------------------
// Grothendieck extension

struct Extension {
  PomonoidPtr monoid;
  std::vector<Elem> embedding;
};

// (M x M_U) / ~ with (x, u) ~ (y, v) iff xv = yu.
Extension grothendieck(const FinitePomonoid& m, std::span<const Elem> u);

// ---------------------------------------------------------------------------
// Grillet monoids

// Commutative semigroup with an absorbing zero in which every element is nilpotent.
struct Nilsemigroup {
  std::vector<std::string> names;
  Elem zero = 0;
  std::vector<Elem> mul;

  std::size_t size() const { return names.size(); }
  Elem product(Elem a, Elem b) const { return mul[a * names.size() + b]; }
};

std::optional<Violation> validate(const Nilsemigroup& n);
// <{1..d}, min(d, x+y)>; element i is named i+1 and the zero is d.
Nilsemigroup truncated_sum_nilsemigroup(unsigned d);
// Omega = {0}.
Nilsemigroup trivial_nilsemigroup();

// Index convention for Omega^1: 0..|Omega|-1 are Omega, |Omega| is the adjoined unit.
struct FactorSet {
  PomonoidPtr group;
  std::vector<Elem> sigma;  // (|Omega|+1)^2 entries, read only where the product is nonzero

  static FactorSet trivial(const Nilsemigroup& omega, PomonoidPtr group);
  Elem at(std::size_t omega_size, Elem a, Elem b) const { return sigma[a * (omega_size + 1) + b]; }
};

std::optional<Violation> validate(const Nilsemigroup& omega, const FactorSet& sigma);

struct GrilletReport {
  std::size_t size = 0;
  std::optional<Elem> mu;  // unique minimal nonzero element of Omega
  bool omega_trivial = false;
};

// [Omega, G, sigma]: element 0 is the zero, then (g, alpha) for alpha = 1, then Omega minus 0, g inner.
PomonoidPtr grillet_monoid(const Nilsemigroup& omega, const FactorSet& sigma, GrilletReport* report = nullptr);

// The unique minimal element of Omega minus 0 in the order x <= y iff x = uy.
std::optional<Elem> unique_minimal(const Nilsemigroup& omega);

enum class Verdict { holds, fails, inapplicable };
const char* verdict_name(Verdict v);

Verdict weak_irreducibility(const Nilsemigroup& omega, const FactorSet& sigma);

struct SpotcheckResult {
  Verdict verdict = Verdict::inapplicable;
  bool irreducible = false;
  std::string reason;
  PomonoidPtr monoid;
};

// Builds the monoid when the hypotheses hold and tests it for subdirect irreducibility.
SpotcheckResult grillet_spotcheck(const Nilsemigroup& omega, const FactorSet& sigma);

}  // namespace pmfgalois
