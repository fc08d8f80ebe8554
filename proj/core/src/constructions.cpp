#include <algorithm>
#include <bit>
#include <map>

#include "pmfgalois/constructions.hpp"
#include "pmfgalois/error.hpp"

namespace pmfgalois {

namespace {

std::uint64_t down_of(const FinitePomonoid& m, Elem x) {
  std::uint64_t s = 0;
  for (Elem y = 0; y < m.size(); ++y) {
    if (m.leq(y, x)) s |= std::uint64_t{1} << y;
  }
  return s;
}

std::string set_name(const FinitePomonoid& m, std::uint64_t s) {
  std::string out = "{";
  bool first = true;
  for (Elem x = 0; x < m.size(); ++x) {
    if (((s >> x) & 1U) == 0) continue;
    if (!first) out += ",";
    out += m.name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

DownsetCompletion downset_completion(const FinitePomonoid& m, std::size_t cap) {
  const std::size_t n = m.size();
  if (n > kDownsetCarrierCap) throw BudgetError("carrier too large for down-set completion");
  std::vector<std::uint64_t> principal(n);
  for (Elem x = 0; x < n; ++x) principal[x] = down_of(m, x);

  std::vector<std::uint64_t> sets;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    bool closed = true;
    for (std::uint64_t r = s; r != 0 && closed; r &= r - 1) {
      const auto x = static_cast<unsigned>(std::countr_zero(r));
      if ((principal[x] & ~s) != 0) closed = false;
    }
    if (!closed) continue;
    if (sets.size() >= cap) throw BudgetError("down-set completion exceeds its size cap");
    sets.push_back(s);
  }
  std::stable_sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  const std::size_t size = sets.size();
  std::map<std::uint64_t, Elem> index;
  for (Elem i = 0; i < size; ++i) index[sets[i]] = i;

  // left[x][Y] = union of (xy) down over y in Y.
  std::vector<std::uint64_t> left(n * size, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem j = 0; j < size; ++j) {
      std::uint64_t acc = 0;
      for (std::uint64_t r = sets[j]; r != 0; r &= r - 1) {
        const auto y = static_cast<Elem>(std::countr_zero(r));
        acc |= principal[m.mul(x, y)];
      }
      left[x * size + j] = acc;
    }
  }
  std::vector<Elem> mul(size * size);
  std::vector<Elem> add(size * size);
  BoolMatrix leq(size);
  for (Elem i = 0; i < size; ++i) {
    for (Elem j = 0; j < size; ++j) {
      std::uint64_t prod = 0;
      for (std::uint64_t r = sets[i]; r != 0; r &= r - 1) {
        const auto x = static_cast<Elem>(std::countr_zero(r));
        prod |= left[x * size + j];
      }
      mul[i * size + j] = index.at(prod);
      add[i * size + j] = index.at(sets[i] | sets[j]);
      leq.set(i, j, (sets[i] & ~sets[j]) == 0);
    }
  }
  std::vector<std::string> names;
  names.reserve(size);
  for (auto s : sets) names.push_back(set_name(m, s));
  auto mult = std::make_shared<const FinitePomonoid>(std::move(names), index.at(principal[m.unit()]),
                                                     std::move(mul), std::move(leq));
  DownsetCompletion out;
  out.semiring = std::make_shared<const FiniteSemiring>(std::move(mult), index.at(0), std::move(add));
  out.sets = std::move(sets);
  for (Elem x = 0; x < n; ++x) out.embedding.push_back(index.at(principal[x]));
  return out;
}

Weight lift_to_downsets(const Weight& w, std::size_t cap) {
  auto dc = downset_completion(w.target(), cap);
  std::vector<Elem> values;
  values.reserve(w.values().size());
  for (Elem v : w.values()) values.push_back(dc.embedding[v]);
  return Weight(w.base(), w.k(), dc.semiring, std::move(values)).with_label(w.label() + "-downsets");
}

FormalSumAlgebra::FormalSumAlgebra(PomonoidPtr m, unsigned threshold)
    : m_(std::move(m)), threshold_(threshold) {
  const std::size_t n = m_->size();
  if (n > kUpsetCarrierCap) throw BudgetError("carrier too large for up-set enumeration");
  if (threshold_ == 0) throw RangeError("formal sum threshold must be positive");
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    bool up = true;
    for (Elem x = 0; x < n && up; ++x) {
      if (((s >> x) & 1U) == 0) continue;
      for (Elem y = 0; y < n && up; ++y) {
        if (m_->leq(x, y) && ((s >> y) & 1U) == 0) up = false;
      }
    }
    if (up) upsets_.push_back(s);
  }
}

unsigned FormalSumAlgebra::sat_add(unsigned a, unsigned b) const {
  return std::min(a + b, threshold_);
}

FormalSum FormalSumAlgebra::zero() const { return FormalSum{std::vector<unsigned>(m_->size(), 0)}; }

FormalSum FormalSumAlgebra::one() const { return singleton(m_->unit()); }

FormalSum FormalSumAlgebra::singleton(Elem x) const {
  if (x >= m_->size()) throw RangeError("element outside carrier");
  FormalSum s = zero();
  s.mult[x] = 1;
  return s;
}

FormalSum FormalSumAlgebra::add(const FormalSum& a, const FormalSum& b) const {
  FormalSum s = zero();
  for (std::size_t i = 0; i < s.mult.size(); ++i) s.mult[i] = sat_add(a.mult.at(i), b.mult.at(i));
  return s;
}

FormalSum FormalSumAlgebra::mul(const FormalSum& a, const FormalSum& b) const {
  FormalSum s = zero();
  const Elem n = static_cast<Elem>(m_->size());
  for (Elem x = 0; x < n; ++x) {
    if (a.mult.at(x) == 0) continue;
    for (Elem y = 0; y < n; ++y) {
      if (b.mult.at(y) == 0) continue;
      const std::uint64_t term = std::uint64_t{a.mult[x]} * b.mult[y];
      const Elem z = m_->mul(x, y);
      s.mult[z] = static_cast<unsigned>(std::min<std::uint64_t>(s.mult[z] + term, threshold_));
    }
  }
  return s;
}

bool FormalSumAlgebra::leq(const FormalSum& a, const FormalSum& b) const {
  for (auto u : upsets_) {
    std::uint64_t sa = 0;
    std::uint64_t sb = 0;
    for (std::uint64_t r = u; r != 0; r &= r - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(r));
      sa += a.mult.at(x);
      sb += b.mult.at(x);
    }
    if (sa > sb) return false;
  }
  return true;
}

bool FormalSumAlgebra::saturated(const FormalSum& a) const {
  return std::any_of(a.mult.begin(), a.mult.end(), [&](unsigned v) { return v >= threshold_; });
}

bool formal_sum_leq(const PomonoidPtr& m, const FormalSum& x, const FormalSum& y) {
  unsigned top = 1;
  for (unsigned v : x.mult) top = std::max(top, v + 1);
  for (unsigned v : y.mult) top = std::max(top, v + 1);
  return FormalSumAlgebra(m, top).leq(x, y);
}

Extension grothendieck(const FinitePomonoid& m, std::span<const Elem> u) {
  const Elem n = static_cast<Elem>(m.size());
  for (Elem x : u) {
    if (x >= n) throw RangeError("element outside carrier");
  }
  if (!is_commutative(m)) throw PreconditionError("Grothendieck extension needs a commutative monoid");
  for (Elem x : u) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        if (m.mul(x, a) == m.mul(x, b)) {
          throw PreconditionError("element " + m.name(x) + " is not cancellative: " + m.name(x) + "*" +
                                  m.name(a) + " = " + m.name(x) + "*" + m.name(b));
        }
      }
    }
  }
  if (!is_trivially_ordered(m)) throw PreconditionError("Grothendieck extension needs a trivial order");

  const Submonoid mu = submonoid_generated(m, u);
  const auto& inc = mu.inclusion;
  const std::size_t k = inc.size();
  // Pairs (x, u) with x major; class = least equivalent pair.
  const std::size_t pairs = n * k;
  std::vector<std::size_t> rep(pairs);
  std::vector<std::size_t> reps;
  for (std::size_t p = 0; p < pairs; ++p) {
    const Elem x = static_cast<Elem>(p / k);
    const Elem v = inc[p % k];
    rep[p] = p;
    for (std::size_t q : reps) {
      const Elem y = static_cast<Elem>(q / k);
      const Elem w = inc[q % k];
      if (m.mul(x, w) == m.mul(y, v)) {
        rep[p] = q;
        break;
      }
    }
    if (rep[p] == p) reps.push_back(p);
  }
  std::map<std::size_t, Elem> cls;
  for (std::size_t i = 0; i < reps.size(); ++i) cls[reps[i]] = static_cast<Elem>(i);
  const std::size_t size = reps.size();
  // Position of u in the submonoid, for forming products.
  std::map<Elem, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos[inc[i]] = i;

  std::vector<std::string> names;
  for (std::size_t r : reps) {
    const Elem x = static_cast<Elem>(r / k);
    const Elem v = inc[r % k];
    names.push_back(v == m.unit() ? m.name(x) : m.name(x) + "/" + m.name(v));
  }
  std::vector<Elem> mul(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const Elem x = static_cast<Elem>(reps[i] / k);
      const Elem y = static_cast<Elem>(reps[j] / k);
      const Elem v = inc[reps[i] % k];
      const Elem w = inc[reps[j] % k];
      const std::size_t p = m.mul(x, y) * k + pos.at(m.mul(v, w));
      mul[i * size + j] = cls.at(rep[p]);
    }
  }
  const std::size_t unit_pair = m.unit() * k + pos.at(m.unit());
  Extension out;
  out.monoid = std::make_shared<const FinitePomonoid>(std::move(names), cls.at(rep[unit_pair]), std::move(mul),
                                                      BoolMatrix::identity(size));
  for (Elem x = 0; x < n; ++x) out.embedding.push_back(cls.at(rep[x * k + pos.at(m.unit())]));
  return out;
}

}  // namespace pmfgalois
