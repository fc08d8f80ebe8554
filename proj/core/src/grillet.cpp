#include <algorithm>

#include "pmfgalois/constructions.hpp"
#include "pmfgalois/error.hpp"

namespace pmfgalois {

namespace {

// Product in Omega^1; the adjoined unit has index |Omega|.
Elem product1(const Nilsemigroup& o, Elem a, Elem b) {
  const auto one = static_cast<Elem>(o.size());
  if (a == one) return b;
  if (b == one) return a;
  return o.product(a, b);
}

std::optional<Elem> group_inverse(const FinitePomonoid& g, Elem a) {
  for (Elem b = 0; b < g.size(); ++b) {
    if (g.mul(a, b) == g.unit()) return b;
  }
  return std::nullopt;
}

unsigned element_order(const FinitePomonoid& g, Elem a) {
  unsigned k = 1;
  for (Elem p = a; p != g.unit(); p = g.mul(p, a)) ++k;
  return k;
}

bool prime_power(std::size_t n) {
  if (n < 2) return false;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::string alpha_name(const Nilsemigroup& o, Elem a) {
  return a == o.size() ? std::string("e") : o.names[a];
}

}  // namespace

std::optional<Violation> validate(const Nilsemigroup& o) {
  const auto n = static_cast<Elem>(o.size());
  if (n == 0) return Violation{"nonempty", {}, "nilsemigroup has no elements"};
  if (o.zero >= n) return Violation{"zero", {}, "zero outside carrier"};
  if (o.mul.size() != static_cast<std::size_t>(n) * n) {
    return Violation{"dimensions", {}, "multiplication table has wrong dimensions"};
  }
  for (Elem e : o.mul) {
    if (e >= n) return Violation{"range", {e}, "table entry outside carrier"};
  }
  for (Elem x = 0; x < n; ++x) {
    if (o.product(o.zero, x) != o.zero || o.product(x, o.zero) != o.zero) {
      return Violation{"absorbing-zero", {x}, "0 is not absorbing"};
    }
    for (Elem y = 0; y < n; ++y) {
      if (o.product(x, y) != o.product(y, x)) return Violation{"commutativity", {x, y}, "xy != yx"};
      for (Elem z = 0; z < n; ++z) {
        if (o.product(o.product(x, y), z) != o.product(x, o.product(y, z))) {
          return Violation{"associativity", {x, y, z}, "(xy)z != x(yz)"};
        }
      }
    }
    Elem p = x;
    for (Elem i = 0; i < n && p != o.zero; ++i) p = o.product(p, x);
    if (p != o.zero) return Violation{"nilpotency", {x}, "no power of x is 0"};
  }
  return std::nullopt;
}

Nilsemigroup truncated_sum_nilsemigroup(unsigned d) {
  if (d == 0) throw RangeError("truncation point must be positive");
  Nilsemigroup o;
  for (unsigned i = 1; i <= d; ++i) o.names.push_back(std::to_string(i));
  o.zero = d - 1;
  o.mul.resize(static_cast<std::size_t>(d) * d);
  for (unsigned a = 0; a < d; ++a) {
    for (unsigned b = 0; b < d; ++b) o.mul[a * d + b] = std::min(d, a + b + 2) - 1;
  }
  return o;
}

Nilsemigroup trivial_nilsemigroup() { return Nilsemigroup{{"0"}, 0, {0}}; }

FactorSet FactorSet::trivial(const Nilsemigroup& omega, PomonoidPtr group) {
  const std::size_t w = omega.size() + 1;
  const Elem unit = group->unit();
  return FactorSet{std::move(group), std::vector<Elem>(w * w, unit)};
}

std::optional<Violation> validate(const Nilsemigroup& omega, const FactorSet& sigma) {
  if (auto v = validate(omega)) return v;
  if (!sigma.group) return Violation{"group", {}, "factor set without a group"};
  const FinitePomonoid& g = *sigma.group;
  if (auto v = validate(g)) return v;
  if (!is_commutative(g)) return Violation{"abelian", {}, "group is not commutative"};
  for (Elem a = 0; a < g.size(); ++a) {
    if (!group_inverse(g, a)) return Violation{"group", {a}, "element has no inverse"};
  }
  const std::size_t n = omega.size();
  const auto one = static_cast<Elem>(n);
  if (sigma.sigma.size() != (n + 1) * (n + 1)) return Violation{"dimensions", {}, "factor set has wrong size"};
  for (Elem e : sigma.sigma) {
    if (e >= g.size()) return Violation{"range", {e}, "factor set value outside group"};
  }
  for (Elem a = 0; a <= one; ++a) {
    for (Elem b = 0; b <= one; ++b) {
      if (product1(omega, a, b) == omega.zero) continue;
      if (sigma.at(n, a, b) != sigma.at(n, b, a)) return Violation{"symmetry", {a, b}, "sigma is not symmetric"};
      if (b == one && sigma.at(n, a, b) != g.unit()) {
        return Violation{"normalization", {a}, "sigma(alpha, 1) is not the unit"};
      }
      for (Elem c = 0; c <= one; ++c) {
        const Elem ab = product1(omega, a, b);
        const Elem bc = product1(omega, b, c);
        if (product1(omega, ab, c) == omega.zero) continue;
        const Elem lhs = g.mul(sigma.at(n, a, b), sigma.at(n, ab, c));
        const Elem rhs = g.mul(sigma.at(n, a, bc), sigma.at(n, b, c));
        if (lhs != rhs) return Violation{"cocycle", {a, b, c}, "cocycle identity fails"};
      }
    }
  }
  return std::nullopt;
}

PomonoidPtr grillet_monoid(const Nilsemigroup& omega, const FactorSet& sigma, GrilletReport* report) {
  if (auto v = validate(omega, sigma)) {
    std::string w;
    for (Elem e : v->witness) w += (w.empty() ? "" : ",") + std::to_string(e);
    throw ValidationError(v->axiom + ": " + v->message + " at (" + w + ")");
  }
  const FinitePomonoid& g = *sigma.group;
  const std::size_t n = omega.size();
  const auto one = static_cast<Elem>(n);
  std::vector<Elem> alphas{one};
  for (Elem a = 0; a < n; ++a) {
    if (a != omega.zero) alphas.push_back(a);
  }
  const std::size_t gs = g.size();
  const std::size_t size = 1 + gs * alphas.size();
  std::vector<Elem> slot(n + 1, 0);
  for (std::size_t i = 0; i < alphas.size(); ++i) slot[alphas[i]] = static_cast<Elem>(i);
  auto index = [&](Elem gi, Elem a) { return static_cast<Elem>(1 + slot[a] * gs + gi); };

  std::vector<std::string> names{"0"};
  for (Elem a : alphas) {
    for (Elem gi = 0; gi < gs; ++gi) names.push_back("(" + g.name(gi) + "," + alpha_name(omega, a) + ")");
  }
  std::vector<Elem> mul(size * size, 0);
  for (Elem a : alphas) {
    for (Elem b : alphas) {
      const Elem ab = product1(omega, a, b);
      if (ab == omega.zero) continue;
      for (Elem x = 0; x < gs; ++x) {
        for (Elem y = 0; y < gs; ++y) {
          const Elem z = g.mul(g.mul(x, y), sigma.at(n, a, b));
          mul[index(x, a) * size + index(y, b)] = index(z, ab);
        }
      }
    }
  }
  auto m = std::make_shared<const FinitePomonoid>(std::move(names), index(g.unit(), one), std::move(mul),
                                                  BoolMatrix::identity(size));
  if (auto v = validate(*m)) throw ValidationError("assembled monoid fails " + v->axiom);
  if (report) {
    report->size = size;
    report->mu = unique_minimal(omega);
    report->omega_trivial = n == 1;
  }
  return m;
}

std::optional<Elem> unique_minimal(const Nilsemigroup& omega) {
  std::optional<Elem> found;
  for (Elem x = 0; x < omega.size(); ++x) {
    if (x == omega.zero) continue;
    bool minimal = true;
    for (Elem u = 0; u < omega.size() && minimal; ++u) {
      if (omega.product(u, x) != omega.zero) minimal = false;
    }
    if (!minimal) continue;
    if (found) return std::nullopt;
    found = x;
  }
  return found;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "inapplicable";
}

Verdict weak_irreducibility(const Nilsemigroup& omega, const FactorSet& sigma) {
  if (auto v = validate(omega, sigma)) throw ValidationError(v->axiom + ": " + v->message);
  const std::size_t n = omega.size();
  if (n == 1) return Verdict::holds;
  const auto mu = unique_minimal(omega);
  if (!mu) return Verdict::inapplicable;
  const FinitePomonoid& g = *sigma.group;
  const auto one = static_cast<Elem>(n);
  std::vector<Elem> alphas;
  for (Elem a = 0; a <= one; ++a) {
    if (a != omega.zero) alphas.push_back(a);
  }
  auto annihilated = [&](Elem a) {
    std::vector<Elem> out;
    for (Elem t = 0; t < n; ++t) {
      if (product1(omega, t, a) == *mu) out.push_back(t);
    }
    return out;
  };
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      const Elem a = alphas[i];
      const Elem b = alphas[j];
      const auto ta = annihilated(a);
      if (ta != annihilated(b)) continue;
      std::optional<Elem> value;
      bool constant = true;
      for (Elem t : ta) {
        const Elem r = g.mul(sigma.at(n, a, t), *group_inverse(g, sigma.at(n, b, t)));
        if (value && *value != r) constant = false;
        value = r;
      }
      if (constant) return Verdict::fails;
    }
  }
  return Verdict::holds;
}

SpotcheckResult grillet_spotcheck(const Nilsemigroup& omega, const FactorSet& sigma) {
  SpotcheckResult r;
  if (auto v = validate(omega, sigma)) throw ValidationError(v->axiom + ": " + v->message);
  const FinitePomonoid& g = *sigma.group;
  if (g.size() > 1) {
    bool cyclic = false;
    for (Elem a = 0; a < g.size() && !cyclic; ++a) cyclic = element_order(g, a) == g.size();
    if (!cyclic || !prime_power(g.size())) {
      r.reason = "group is neither trivial nor cyclic of prime power order";
      return r;
    }
  }
  if (omega.size() > 1) {
    if (!unique_minimal(omega)) {
      r.reason = "nilsemigroup has no unique minimal nonzero element";
      return r;
    }
    if (weak_irreducibility(omega, sigma) != Verdict::holds) {
      r.reason = "not weakly irreducible";
      return r;
    }
  }
  r.monoid = grillet_monoid(omega, sigma);
  r.irreducible = is_subdirectly_irreducible(*r.monoid, Quasivariety::trivially_ordered);
  r.verdict = r.irreducible ? Verdict::holds : Verdict::fails;
  if (!r.irreducible) r.reason = "assembled monoid is not subdirectly irreducible";
  return r;
}

}  // namespace pmfgalois
