#include "pmfgalois/weight.hpp"

#include <algorithm>

#include "pmfgalois/error.hpp"

namespace pmfgalois {

Weight::Weight(unsigned base, unsigned k, PomonoidPtr target, std::vector<Elem> values)
    : base_(base), k_(k), target_(std::move(target)), values_(std::move(values)) {
  if (!target_) throw ValidationError("weight without target");
  if (base > kMaxBase) throw ShapeError("base size exceeds cap");
  if (k > kMaxTotalArity) throw ShapeError("weight arity exceeds cap");
  if (values_.size() != ipow(base, k)) {
    throw ValidationError("weight has " + std::to_string(values_.size()) + " values, expected " +
                          std::to_string(ipow(base, k)));
  }
  for (Elem v : values_) {
    if (v >= target_->size()) throw RangeError("weight value outside target");
  }
}

Weight::Weight(unsigned base, unsigned k, SemiringPtr semiring, std::vector<Elem> values)
    : Weight(base, k, semiring ? semiring->mult_ptr() : PomonoidPtr{}, std::move(values)) {
  semiring_ = std::move(semiring);
}

Weight Weight::with_label(std::string label) const {
  Weight w = *this;
  w.label_ = std::move(label);
  return w;
}

Weight substitute(const Weight& w, std::span<const unsigned> rho, unsigned k_new) {
  if (rho.size() != w.k()) throw RangeError("substitution must map every variable of the weight");
  for (unsigned r : rho) {
    if (r >= k_new) throw RangeError("substitution target index out of range");
  }
  const unsigned b = w.base();
  std::vector<Elem> values(ipow(b, k_new));
  std::vector<Digit> src(w.k());
  for (Code x = 0; x < values.size(); ++x) {
    auto d = decode(x, k_new, b);
    for (unsigned i = 0; i < w.k(); ++i) src[i] = d[rho[i]];
    values[x] = w(encode(src, b));
  }
  if (w.semiring()) return Weight(b, k_new, w.semiring(), std::move(values));
  return Weight(b, k_new, w.target_ptr(), std::move(values));
}

Weight map_hom(const Weight& w, const MonoidHom& phi) {
  if (!phi.source || !(*phi.source == w.target())) {
    throw ShapeError("homomorphism source differs from weight target");
  }
  std::vector<Elem> values(w.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = phi.map[w.values()[i]];
  return Weight(w.base(), w.k(), phi.target, std::move(values));
}

Weight product_weight(std::span<const Weight> ws, unsigned base, unsigned k, std::size_t cap) {
  std::vector<PomonoidPtr> targets;
  for (const auto& w : ws) {
    if (w.base() != base || w.k() != k) throw ShapeError("product of weights with different arity or base");
    targets.push_back(w.target_ptr());
  }
  auto prod = direct_product(targets, cap);
  std::vector<Elem> values(ipow(base, k));
  for (Code x = 0; x < values.size(); ++x) {
    std::size_t c = 0;
    for (const auto& w : ws) c = c * w.target().size() + w(x);
    values[x] = static_cast<Elem>(c);
  }
  return Weight(base, k, prod, std::move(values));
}

Submonoid range_submonoid(const Weight& w) {
  std::vector<Elem> gens = w.values();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return submonoid_generated(w.target(), gens);
}

Weight restrict_range(const Weight& w) {
  Submonoid sub = range_submonoid(w);
  std::vector<Elem> index(w.target().size(), 0);
  for (Elem i = 0; i < sub.inclusion.size(); ++i) index[sub.inclusion[i]] = i;
  std::vector<Elem> values(w.values().size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = index[w.values()[i]];
  return Weight(w.base(), w.k(), sub.monoid, std::move(values)).with_label(w.label());
}

Weight weight_plus(const Weight& w, unsigned l) {
  if (l < 1 || w.k() < l) throw PreconditionError("weight_plus needs 1 <= l <= k");
  if (!w.semiring()) throw PreconditionError("weight_plus needs a semiring target");
  const FiniteSemiring& s = *w.semiring();
  const unsigned b = w.base();
  const Code tail = ipow(b, l);
  std::vector<Elem> values(ipow(b, w.k() - l));
  for (Code x = 0; x < values.size(); ++x) {
    Elem acc = s.zero();
    for (Code u = 0; u < tail; ++u) acc = s.add(acc, w(x * tail + u));
    values[x] = acc;
  }
  return Weight(b, w.k() - l, w.semiring(), std::move(values));
}

Weight trivially_ordered(const Weight& w) {
  const FinitePomonoid& m = w.target();
  FinitePomonoid eq(m.names(), m.unit(), m.table(), BoolMatrix::identity(m.size()));
  auto target = std::make_shared<const FinitePomonoid>(eq.with_saturation(m.saturation()));
  return Weight(w.base(), w.k(), target, w.values());
}

Weight diagonal_weight(const Weight& w) {
  std::vector<unsigned> rho(w.k(), 0);
  return substitute(w, rho, 1);
}

}  // namespace pmfgalois
