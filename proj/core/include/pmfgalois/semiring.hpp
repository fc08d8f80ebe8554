#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "pmfgalois/pomonoid.hpp"

namespace pmfgalois {

// Multiplicative pomonoid plus a commutative additive monoid on the same ordered carrier.
class FiniteSemiring {
 public:
  FiniteSemiring(PomonoidPtr mult, Elem zero, std::vector<Elem> add);

  const FinitePomonoid& mult() const { return *mult_; }
  const PomonoidPtr& mult_ptr() const { return mult_; }
  std::size_t size() const { return mult_->size(); }
  Elem zero() const { return zero_; }
  Elem one() const { return mult_->unit(); }
  Elem add(Elem a, Elem b) const { return add_[a * size() + b]; }
  Elem mul(Elem a, Elem b) const { return mult_->mul(a, b); }
  bool leq(Elem a, Elem b) const { return mult_->leq(a, b); }
  const std::vector<Elem>& add_table() const { return add_; }

 private:
  PomonoidPtr mult_;
  Elem zero_;
  std::vector<Elem> add_;
};

using SemiringPtr = std::shared_ptr<const FiniteSemiring>;

std::optional<Violation> validate(const FiniteSemiring& s);
void require_valid(const FiniteSemiring& s);

struct SemiringPredicates {
  bool positive;
  bool negative;
  bool idempotent;
  bool lor_semiring;
  bool land_semiring;
  bool continuous;
};
SemiringPredicates semiring_predicates(const FiniteSemiring& s);

// Least upper bound in the carrier order, if one exists.
std::optional<Elem> join(const FinitePomonoid& m, Elem a, Elem b);
std::optional<Elem> meet(const FinitePomonoid& m, Elem a, Elem b);

// ({0,1}, or, and) with the chosen order on {0,1}.
SemiringPtr boolean_semiring(OrderKind order);
// {0..T} with saturating + and *; T is named "T+".
SemiringPtr nat_semiring(unsigned threshold, OrderKind order);

}  // namespace pmfgalois
