#include "pmfgalois/pomonoid.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "pmfgalois/error.hpp"

namespace pmfgalois {

FinitePomonoid::FinitePomonoid(std::vector<std::string> names, Elem unit, std::vector<Elem> mul,
                               BoolMatrix leq)
    : names_(std::move(names)), unit_(unit), mul_(std::move(mul)), leq_(std::move(leq)) {
  const std::size_t n = names_.size();
  if (n == 0) throw ValidationError("pomonoid must have at least one element");
  if (mul_.size() != n * n) throw ValidationError("multiplication table has wrong dimensions");
  if (leq_.size() != n) throw ValidationError("order matrix has wrong dimensions");
  if (unit_ >= n) throw RangeError("unit outside carrier");
  for (Elem e : mul_) {
    if (e >= n) throw RangeError("multiplication table entry outside carrier");
  }
}

std::optional<Elem> FinitePomonoid::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

Elem FinitePomonoid::power(Elem a, unsigned k) const {
  Elem r = unit_;
  for (unsigned i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Elem FinitePomonoid::fold(std::span<const Elem> xs) const {
  Elem r = unit_;
  for (Elem x : xs) r = mul(r, x);
  return r;
}

FinitePomonoid FinitePomonoid::with_saturation(std::optional<Elem> s) const {
  if (s && *s >= size()) throw RangeError("saturation element outside carrier");
  FinitePomonoid copy = *this;
  copy.saturation_ = s;
  return copy;
}

std::optional<Violation> validate(const FinitePomonoid& m) {
  const Elem n = static_cast<Elem>(m.size());
  for (Elem x = 0; x < n; ++x) {
    if (m.mul(m.unit(), x) != x || m.mul(x, m.unit()) != x) {
      return Violation{"unit", {x}, "unit is not two-sided at " + m.name(x)};
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z))) {
          return Violation{"associativity", {x, y, z},
                           "(xy)z != x(yz) for " + m.name(x) + "," + m.name(y) + "," + m.name(z)};
        }
      }
    }
  }
  const BoolMatrix& r = m.order();
  for (Elem x = 0; x < n; ++x) {
    if (!r(x, x)) return Violation{"reflexivity", {x}, "order is not reflexive at " + m.name(x)};
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (x != y && r(x, y) && r(y, x)) {
        return Violation{"antisymmetry", {x, y}, m.name(x) + " and " + m.name(y) + " are mutually related"};
      }
      if (!r(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (r(y, z) && !r(x, z)) {
          return Violation{"transitivity", {x, y, z}, "order is not transitive"};
        }
        if (!r(m.mul(x, z), m.mul(y, z)) || !r(m.mul(z, x), m.mul(z, y))) {
          return Violation{"compatibility", {x, y, z},
                           "multiplication by " + m.name(z) + " is not monotone on " + m.name(x) +
                               " <= " + m.name(y)};
        }
      }
    }
  }
  return std::nullopt;
}

void require_valid(const FinitePomonoid& m) {
  if (auto v = validate(m)) throw ValidationError(v->axiom + ": " + v->message);
}

bool is_commutative(const FinitePomonoid& m) {
  const Elem n = static_cast<Elem>(m.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (m.mul(x, y) != m.mul(y, x)) return false;
    }
  }
  return true;
}

bool is_trivially_ordered(const FinitePomonoid& m) {
  return m.order() == BoolMatrix::identity(m.size());
}

std::optional<Violation> validate(const MonoidHom& h) {
  if (!h.source || !h.target) return Violation{"shape", {}, "homomorphism without source or target"};
  const auto& s = *h.source;
  const auto& t = *h.target;
  if (h.map.size() != s.size()) return Violation{"shape", {}, "map length differs from source size"};
  for (Elem x = 0; x < s.size(); ++x) {
    if (h.map[x] >= t.size()) return Violation{"range", {x}, "image outside target"};
  }
  if (h.map[s.unit()] != t.unit()) return Violation{"unit", {s.unit()}, "unit not preserved"};
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) {
      if (h.map[s.mul(x, y)] != t.mul(h.map[x], h.map[y])) {
        return Violation{"multiplicativity", {x, y}, "h(xy) != h(x)h(y)"};
      }
      if (s.leq(x, y) && !t.leq(h.map[x], h.map[y])) {
        return Violation{"monotonicity", {x, y}, "order not preserved"};
      }
    }
  }
  return std::nullopt;
}

MonoidHom identity_hom(const PomonoidPtr& m) {
  MonoidHom h{m, m, std::vector<Elem>(m->size())};
  for (Elem x = 0; x < m->size(); ++x) h.map[x] = x;
  return h;
}

MonoidHom collapse_hom(const PomonoidPtr& m) {
  return MonoidHom{m, trivial_pomonoid(), std::vector<Elem>(m->size(), 0)};
}

BoolMatrix order_kernel(const MonoidHom& h) {
  const auto& s = *h.source;
  BoolMatrix r(s.size());
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) r.set(x, y, h.target->leq(h.map[x], h.map[y]));
  }
  return r;
}

PomonoidPtr trivial_pomonoid() {
  return std::make_shared<const FinitePomonoid>(std::vector<std::string>{"1"}, 0,
                                                std::vector<Elem>{0}, BoolMatrix::identity(1));
}

PomonoidPtr direct_product(const std::vector<PomonoidPtr>& factors, std::size_t cap) {
  std::size_t total = 1;
  for (const auto& f : factors) {
    total *= f->size();
    if (total > cap) {
      throw ShapeError("direct product size exceeds cap " + std::to_string(cap));
    }
  }
  const std::size_t k = factors.size();
  auto digits_of = [&](std::size_t code) {
    std::vector<Elem> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = static_cast<Elem>(code % factors[i]->size());
      code /= factors[i]->size();
    }
    return d;
  };
  auto code_of = [&](const std::vector<Elem>& d) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < k; ++i) c = c * factors[i]->size() + d[i];
    return static_cast<Elem>(c);
  };
  std::vector<std::vector<Elem>> tuples(total);
  std::vector<std::string> names(total);
  for (std::size_t c = 0; c < total; ++c) {
    tuples[c] = digits_of(c);
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += factors[i]->name(tuples[c][i]);
    }
    names[c] = s + ")";
  }
  std::vector<Elem> unit_digits(k);
  for (std::size_t i = 0; i < k; ++i) unit_digits[i] = factors[i]->unit();
  std::vector<Elem> mul(total * total);
  BoolMatrix leq(total);
  std::vector<Elem> tmp(k);
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = 0; b < total; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < k; ++i) {
        tmp[i] = factors[i]->mul(tuples[a][i], tuples[b][i]);
        le = le && factors[i]->leq(tuples[a][i], tuples[b][i]);
      }
      mul[a * total + b] = code_of(tmp);
      leq.set(a, b, le);
    }
  }
  return std::make_shared<const FinitePomonoid>(std::move(names), code_of(unit_digits),
                                                std::move(mul), std::move(leq));
}

Submonoid submonoid_generated(const FinitePomonoid& m, std::span<const Elem> generators) {
  const std::size_t n = m.size();
  std::vector<bool> in(n, false);
  std::vector<Elem> members{m.unit()};
  in[m.unit()] = true;
  for (Elem g : generators) {
    if (g >= n) throw RangeError("generator outside carrier");
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem p : {m.mul(members[i], members[j]), m.mul(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  std::vector<Elem> inc;
  for (Elem x = 0; x < n; ++x) {
    if (in[x]) inc.push_back(x);
  }
  std::vector<Elem> index(n, 0);
  for (Elem i = 0; i < inc.size(); ++i) index[inc[i]] = i;
  const std::size_t s = inc.size();
  std::vector<std::string> names(s);
  std::vector<Elem> mul(s * s);
  BoolMatrix leq(s);
  for (std::size_t a = 0; a < s; ++a) {
    names[a] = m.name(inc[a]);
    for (std::size_t b = 0; b < s; ++b) {
      mul[a * s + b] = index[m.mul(inc[a], inc[b])];
      leq.set(a, b, m.leq(inc[a], inc[b]));
    }
  }
  FinitePomonoid sub(std::move(names), index[m.unit()], std::move(mul), std::move(leq));
  if (m.saturation() && in[*m.saturation()]) sub = sub.with_saturation(index[*m.saturation()]);
  return Submonoid{std::make_shared<const FinitePomonoid>(std::move(sub)), std::move(inc)};
}

bool is_invariant_preorder(const FinitePomonoid& m, const BoolMatrix& rel) {
  if (rel.size() != m.size()) return false;
  if (!rel.reflexive() || !rel.transitive() || !m.order().subset_of(rel)) return false;
  const Elem n = static_cast<Elem>(m.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!rel(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        if (!rel(m.mul(x, z), m.mul(y, z)) || !rel(m.mul(z, x), m.mul(z, y))) return false;
      }
    }
  }
  return true;
}

BoolMatrix least_invariant_preorder(const FinitePomonoid& m,
                                    std::span<const std::pair<Elem, Elem>> pairs, bool symmetric) {
  const Elem n = static_cast<Elem>(m.size());
  BoolMatrix r = m.order();
  std::deque<std::pair<Elem, Elem>> work;
  auto add = [&](Elem x, Elem y) {
    if (!r(x, y)) {
      r.set(x, y);
      work.emplace_back(x, y);
    }
  };
  for (Elem x = 0; x < n; ++x) add(x, x);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw RangeError("preorder pair outside carrier");
    add(a, b);
  }
  if (symmetric) {
    for (const auto& [x, y] : m.order().pairs()) add(static_cast<Elem>(y), static_cast<Elem>(x));
  }
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (symmetric) add(y, x);
    for (Elem z = 0; z < n; ++z) {
      add(m.mul(x, z), m.mul(y, z));
      add(m.mul(z, x), m.mul(z, y));
    }
    for (Elem w = 0; w < n; ++w) {
      if (r(w, x)) add(w, y);
      if (r(y, w)) add(x, w);
    }
  }
  return r;
}

Quotient quotient(const FinitePomonoid& m, const BoolMatrix& rel) {
  if (!is_invariant_preorder(m, rel)) {
    throw PreconditionError("quotient requires an invariant preorder extending the order");
  }
  const Elem n = static_cast<Elem>(m.size());
  std::vector<Elem> cls(n, 0);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    bool found = false;
    for (Elem c = 0; c < reps.size(); ++c) {
      if (rel(x, reps[c]) && rel(reps[c], x)) {
        cls[x] = c;
        found = true;
        break;
      }
    }
    if (!found) {
      cls[x] = static_cast<Elem>(reps.size());
      reps.push_back(x);
    }
  }
  const std::size_t k = reps.size();
  std::vector<std::string> names(k);
  std::vector<Elem> mul(k * k);
  BoolMatrix leq(k);
  for (std::size_t a = 0; a < k; ++a) {
    names[a] = m.name(reps[a]);
    for (std::size_t b = 0; b < k; ++b) {
      mul[a * k + b] = cls[m.mul(reps[a], reps[b])];
      leq.set(a, b, rel(reps[a], reps[b]));
    }
  }
  FinitePomonoid q(std::move(names), cls[m.unit()], std::move(mul), std::move(leq));
  if (m.saturation()) q = q.with_saturation(cls[*m.saturation()]);
  return Quotient{std::make_shared<const FinitePomonoid>(std::move(q)), std::move(cls)};
}

SiResult subdirect_irreducibility(const FinitePomonoid& m, Quasivariety q) {
  const bool sym = q == Quasivariety::trivially_ordered;
  if (sym && !is_trivially_ordered(m)) {
    throw PreconditionError("relative irreducibility for trivially ordered pomonoids needs a trivial order");
  }
  const Elem n = static_cast<Elem>(m.size());
  std::vector<BoolMatrix> exts;
  std::vector<std::pair<Elem, Elem>> gens;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (m.leq(a, b)) continue;
      const std::pair<Elem, Elem> p{a, b};
      BoolMatrix e = least_invariant_preorder(m, std::span(&p, 1), sym);
      if (std::find(exts.begin(), exts.end(), e) == exts.end()) {
        exts.push_back(std::move(e));
        gens.push_back(p);
      }
    }
  }
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < exts.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < exts.size() && is_min; ++j) {
      if (j != i && exts[j].subset_of(exts[i])) is_min = false;
    }
    if (is_min) minimal.push_back(i);
  }
  SiResult r;
  if (minimal.size() == 1) {
    r.irreducible = true;
    r.monolith = exts[minimal[0]];
    // Lex-least pair of the monolith outside leq; every such pair generates it.
    for (Elem a = 0; a < n && !r.monolith_pair; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if ((*r.monolith)(a, b) && !m.leq(a, b)) {
          r.monolith_pair = std::pair<Elem, Elem>{a, b};
          break;
        }
      }
    }
  } else if (minimal.size() >= 2) {
    for (std::size_t t = 0; t < 2; ++t) {
      r.separating.push_back(exts[minimal[t]]);
      r.separating_pairs.push_back(gens[minimal[t]]);
    }
  }
  return r;
}

ElementPredicates element_predicates(const FinitePomonoid& m, Elem u) {
  const Elem n = static_cast<Elem>(m.size());
  if (u >= n) throw RangeError("element outside carrier");
  ElementPredicates p{true, true, false, m.mul(u, u) == u};
  for (Elem x = 0; x < n; ++x) {
    if (m.mul(u, x) == m.unit() && m.mul(x, u) == m.unit()) p.invertible = true;
    for (Elem y = 0; y < n; ++y) {
      if (x != y && (m.mul(x, u) == m.mul(y, u) || m.mul(u, x) == m.mul(u, y))) p.cancellative = false;
      if (m.leq(m.mul(x, u), m.mul(y, u)) && !m.leq(x, y)) p.right_order_cancellative = false;
    }
  }
  return p;
}

const char* order_kind_name(OrderKind o) {
  switch (o) {
    case OrderKind::le: return "le";
    case OrderKind::ge: return "ge";
    case OrderKind::eq: return "eq";
  }
  return "eq";
}

OrderKind parse_order_kind(std::string_view s) {
  if (s == "le" || s == "<=") return OrderKind::le;
  if (s == "ge" || s == ">=") return OrderKind::ge;
  if (s == "eq" || s == "=") return OrderKind::eq;
  throw ParseError("unknown order selector '" + std::string(s) + "'");
}

namespace {

BoolMatrix chain_order(std::size_t n, OrderKind order) {
  BoolMatrix r(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      switch (order) {
        case OrderKind::le: r.set(a, b, a <= b); break;
        case OrderKind::ge: r.set(a, b, a >= b); break;
        case OrderKind::eq: r.set(a, b, a == b); break;
      }
    }
  }
  return r;
}

}  // namespace

PomonoidPtr cyclic_group(unsigned c) {
  if (c == 0) throw RangeError("cyclic group order must be positive");
  std::vector<std::string> names(c);
  std::vector<Elem> mul(static_cast<std::size_t>(c) * c);
  for (unsigned a = 0; a < c; ++a) {
    names[a] = std::to_string(a);
    for (unsigned b = 0; b < c; ++b) mul[a * c + b] = (a + b) % c;
  }
  return std::make_shared<const FinitePomonoid>(std::move(names), 0, std::move(mul),
                                                BoolMatrix::identity(c));
}

PomonoidPtr nat_truncated(unsigned threshold, OrderKind order) {
  if (threshold == 0) throw RangeError("saturation threshold must be positive");
  const unsigned n = threshold + 1;
  std::vector<std::string> names(n);
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (unsigned a = 0; a < n; ++a) {
    names[a] = a == threshold ? std::to_string(a) + "+" : std::to_string(a);
    for (unsigned b = 0; b < n; ++b) mul[a * n + b] = std::min(threshold, a + b);
  }
  FinitePomonoid m(std::move(names), 0, std::move(mul), chain_order(n, order));
  return std::make_shared<const FinitePomonoid>(m.with_saturation(threshold));
}

PomonoidPtr meet_chain2(OrderKind order) {
  return std::make_shared<const FinitePomonoid>(std::vector<std::string>{"0", "1"}, 1,
                                                std::vector<Elem>{0, 0, 0, 1}, chain_order(2, order));
}

}  // namespace pmfgalois
