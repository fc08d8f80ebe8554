#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmfgalois/config.hpp"
#include "pmfgalois/relation.hpp"

namespace pmfgalois {

using Elem = std::uint32_t;

// Finite monoid with a compatible partial order. Construction checks only
// table dimensions and entry ranges; use validate() for the axioms.
class FinitePomonoid {
 public:
  FinitePomonoid(std::vector<std::string> names, Elem unit, std::vector<Elem> mul, BoolMatrix leq);

  std::size_t size() const { return names_.size(); }
  Elem unit() const { return unit_; }
  Elem mul(Elem a, Elem b) const { return mul_[a * names_.size() + b]; }
  bool leq(Elem a, Elem b) const { return leq_(a, b); }
  const BoolMatrix& order() const { return leq_; }
  const std::vector<Elem>& table() const { return mul_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem a) const { return names_.at(a); }
  std::optional<Elem> find(std::string_view name) const;

  Elem power(Elem a, unsigned k) const;
  Elem fold(std::span<const Elem> xs) const;

  // The saturating element of a truncated counting monoid, if any.
  std::optional<Elem> saturation() const { return saturation_; }
  FinitePomonoid with_saturation(std::optional<Elem> s) const;

  friend bool operator==(const FinitePomonoid& a, const FinitePomonoid& b) {
    return a.names_ == b.names_ && a.unit_ == b.unit_ && a.mul_ == b.mul_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> names_;
  Elem unit_;
  std::vector<Elem> mul_;
  BoolMatrix leq_;
  std::optional<Elem> saturation_;
};

using PomonoidPtr = std::shared_ptr<const FinitePomonoid>;

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
  std::string message;
};

std::optional<Violation> validate(const FinitePomonoid& m);
// Throws ValidationError naming the violated axiom.
void require_valid(const FinitePomonoid& m);

bool is_commutative(const FinitePomonoid& m);
bool is_trivially_ordered(const FinitePomonoid& m);

struct MonoidHom {
  PomonoidPtr source;
  PomonoidPtr target;
  std::vector<Elem> map;
};

std::optional<Violation> validate(const MonoidHom& h);
MonoidHom identity_hom(const PomonoidPtr& m);
MonoidHom collapse_hom(const PomonoidPtr& m);
// x <= y in the kernel iff h(x) <= h(y).
BoolMatrix order_kernel(const MonoidHom& h);

PomonoidPtr trivial_pomonoid();
PomonoidPtr direct_product(const std::vector<PomonoidPtr>& factors,
                           std::size_t cap = kDefaultMonoidCap);

struct Submonoid {
  PomonoidPtr monoid;
  std::vector<Elem> inclusion;  // submonoid element -> parent element, increasing
};
Submonoid submonoid_generated(const FinitePomonoid& m, std::span<const Elem> generators);

bool is_invariant_preorder(const FinitePomonoid& m, const BoolMatrix& rel);
// Least invariant preorder containing leq and the given pairs. With symmetric
// set, the least such relation that is also symmetric (a congruence).
BoolMatrix least_invariant_preorder(const FinitePomonoid& m,
                                    std::span<const std::pair<Elem, Elem>> pairs,
                                    bool symmetric = false);

struct Quotient {
  PomonoidPtr monoid;
  std::vector<Elem> map;  // element -> class, classes ordered by least member
};
Quotient quotient(const FinitePomonoid& m, const BoolMatrix& rel);

enum class Quasivariety { absolute, trivially_ordered };

struct SiResult {
  bool irreducible = false;
  // The lexicographically least pair generating the monolith.
  std::optional<std::pair<Elem, Elem>> monolith_pair;
  std::optional<BoolMatrix> monolith;
  // When not irreducible: two minimal proper extensions meeting in leq, with generators.
  std::vector<std::pair<Elem, Elem>> separating_pairs;
  std::vector<BoolMatrix> separating;
};

SiResult subdirect_irreducibility(const FinitePomonoid& m,
                                  Quasivariety q = Quasivariety::absolute);
inline bool is_subdirectly_irreducible(const FinitePomonoid& m,
                                       Quasivariety q = Quasivariety::absolute) {
  return subdirect_irreducibility(m, q).irreducible;
}

struct ElementPredicates {
  bool cancellative;
  bool right_order_cancellative;
  bool invertible;
  bool idempotent;
};
ElementPredicates element_predicates(const FinitePomonoid& m, Elem u);

enum class OrderKind { le, ge, eq };
const char* order_kind_name(OrderKind o);
OrderKind parse_order_kind(std::string_view s);

// Z/c under addition, trivially ordered.
PomonoidPtr cyclic_group(unsigned c);
// {0..T} under saturating addition; T is named "T+".
PomonoidPtr nat_truncated(unsigned threshold, OrderKind order);
// <{0,1}, 1, min> with the chosen order.
PomonoidPtr meet_chain2(OrderKind order);

}  // namespace pmfgalois
