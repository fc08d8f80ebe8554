#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pmfgalois/pomonoid.hpp"
#include "pmfgalois/semiring.hpp"
#include "pmfgalois/tuple_code.hpp"

namespace pmfgalois {

// w: B^k -> M, values indexed by tuple code.
class Weight {
 public:
  Weight(unsigned base, unsigned k, PomonoidPtr target, std::vector<Elem> values);
  Weight(unsigned base, unsigned k, SemiringPtr semiring, std::vector<Elem> values);

  unsigned base() const { return base_; }
  unsigned k() const { return k_; }
  const FinitePomonoid& target() const { return *target_; }
  const PomonoidPtr& target_ptr() const { return target_; }
  // Null unless the target carries additive structure.
  const SemiringPtr& semiring() const { return semiring_; }
  const std::vector<Elem>& values() const { return values_; }
  Elem operator()(Code x) const { return values_[x]; }

  const std::string& label() const { return label_; }
  Weight with_label(std::string label) const;

 private:
  unsigned base_;
  unsigned k_;
  PomonoidPtr target_;
  SemiringPtr semiring_;
  std::vector<Elem> values_;
  std::string label_;
};

// result(x^0..x^{k'-1}) = w(x^{rho(0)}, ..., x^{rho(k-1)}).
Weight substitute(const Weight& w, std::span<const unsigned> rho, unsigned k_new);
Weight map_hom(const Weight& w, const MonoidHom& phi);
Weight product_weight(std::span<const Weight> ws, unsigned base, unsigned k,
                      std::size_t cap = kDefaultMonoidCap);
Weight restrict_range(const Weight& w);
// Sums out the last l coordinates.
Weight weight_plus(const Weight& w, unsigned l = 1);

// Same values, target order replaced by equality.
Weight trivially_ordered(const Weight& w);
// w'(u) = w(u, ..., u).
Weight diagonal_weight(const Weight& w);
// The submonoid generated by the range of w.
Submonoid range_submonoid(const Weight& w);

}  // namespace pmfgalois
