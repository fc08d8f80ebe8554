#include "pmfgalois/semiring.hpp"

#include <algorithm>

#include "pmfgalois/error.hpp"

namespace pmfgalois {

FiniteSemiring::FiniteSemiring(PomonoidPtr mult, Elem zero, std::vector<Elem> add)
    : mult_(std::move(mult)), zero_(zero), add_(std::move(add)) {
  if (!mult_) throw ValidationError("semiring without multiplicative part");
  const std::size_t n = mult_->size();
  if (add_.size() != n * n) throw ValidationError("addition table has wrong dimensions");
  if (zero_ >= n) throw RangeError("zero outside carrier");
  for (Elem e : add_) {
    if (e >= n) throw RangeError("addition table entry outside carrier");
  }
}

std::optional<Violation> validate(const FiniteSemiring& s) {
  if (auto v = validate(s.mult())) return v;
  const Elem n = static_cast<Elem>(s.size());
  for (Elem x = 0; x < n; ++x) {
    if (s.add(s.zero(), x) != x) return Violation{"additive-unit", {x}, "0 + x != x"};
    if (s.mul(s.zero(), x) != s.zero() || s.mul(x, s.zero()) != s.zero()) {
      return Violation{"absorbing-zero", {x}, "0 is not multiplicatively absorbing"};
    }
    for (Elem y = 0; y < n; ++y) {
      if (s.add(x, y) != s.add(y, x)) return Violation{"additive-commutativity", {x, y}, "x + y != y + x"};
      for (Elem z = 0; z < n; ++z) {
        if (s.add(s.add(x, y), z) != s.add(x, s.add(y, z))) {
          return Violation{"additive-associativity", {x, y, z}, "(x+y)+z != x+(y+z)"};
        }
        if (s.mul(s.add(x, y), z) != s.add(s.mul(x, z), s.mul(y, z)) ||
            s.mul(z, s.add(x, y)) != s.add(s.mul(z, x), s.mul(z, y))) {
          return Violation{"distributivity", {x, y, z}, "multiplication does not distribute over addition"};
        }
        if (s.leq(x, y) && !s.leq(s.add(x, z), s.add(y, z))) {
          return Violation{"additive-compatibility", {x, y, z}, "addition is not monotone"};
        }
      }
    }
  }
  return std::nullopt;
}

void require_valid(const FiniteSemiring& s) {
  if (auto v = validate(s)) throw ValidationError(v->axiom + ": " + v->message);
}

std::optional<Elem> join(const FinitePomonoid& m, Elem a, Elem b) {
  const Elem n = static_cast<Elem>(m.size());
  std::optional<Elem> best;
  for (Elem u = 0; u < n; ++u) {
    if (!m.leq(a, u) || !m.leq(b, u)) continue;
    bool least = true;
    for (Elem v = 0; v < n && least; ++v) {
      if (m.leq(a, v) && m.leq(b, v) && !m.leq(u, v)) least = false;
    }
    if (least) best = u;
  }
  return best;
}

std::optional<Elem> meet(const FinitePomonoid& m, Elem a, Elem b) {
  const Elem n = static_cast<Elem>(m.size());
  std::optional<Elem> best;
  for (Elem u = 0; u < n; ++u) {
    if (!m.leq(u, a) || !m.leq(u, b)) continue;
    bool greatest = true;
    for (Elem v = 0; v < n && greatest; ++v) {
      if (m.leq(v, a) && m.leq(v, b) && !m.leq(v, u)) greatest = false;
    }
    if (greatest) best = u;
  }
  return best;
}

SemiringPredicates semiring_predicates(const FiniteSemiring& s) {
  const FinitePomonoid& m = s.mult();
  const Elem n = static_cast<Elem>(s.size());
  SemiringPredicates p{};
  p.positive = s.leq(s.zero(), s.one());
  p.negative = s.leq(s.one(), s.zero());
  p.idempotent = true;
  p.lor_semiring = true;
  p.land_semiring = true;
  bool joins = true;
  bool meets = true;
  for (Elem x = 0; x < n; ++x) {
    if (s.add(x, x) != x) p.idempotent = false;
    for (Elem y = 0; y < n; ++y) {
      auto j = join(m, x, y);
      auto mt = meet(m, x, y);
      joins = joins && j.has_value();
      meets = meets && mt.has_value();
      if (!j || *j != s.add(x, y)) p.lor_semiring = false;
      if (!mt || *mt != s.add(x, y)) p.land_semiring = false;
    }
  }
  p.lor_semiring = p.lor_semiring && p.idempotent;
  p.land_semiring = p.land_semiring && p.idempotent;
  // A finite lattice with top and bottom is complete; the binary and empty
  // distributive laws then give the infinitary ones.
  bool has_bottom = false;
  bool has_top = false;
  for (Elem x = 0; x < n; ++x) {
    bool bot = true;
    bool top = true;
    for (Elem y = 0; y < n; ++y) {
      bot = bot && m.leq(x, y);
      top = top && m.leq(y, x);
    }
    has_bottom = has_bottom || bot;
    has_top = has_top || top;
  }
  const bool lattice = joins && meets && has_bottom && has_top;
  bool empty_law = true;
  if (p.lor_semiring) {
    for (Elem x = 0; x < n; ++x) {
      empty_law = empty_law && m.leq(s.zero(), x);
    }
  } else if (p.land_semiring) {
    for (Elem x = 0; x < n; ++x) {
      empty_law = empty_law && m.leq(x, s.zero());
    }
  }
  p.continuous = (p.lor_semiring || p.land_semiring) && lattice && empty_law;
  return p;
}

namespace {

BoolMatrix order2(OrderKind order) {
  BoolMatrix r = BoolMatrix::identity(2);
  if (order == OrderKind::le) r.set(0, 1);
  if (order == OrderKind::ge) r.set(1, 0);
  return r;
}

}  // namespace

SemiringPtr boolean_semiring(OrderKind order) {
  auto mult = std::make_shared<const FinitePomonoid>(std::vector<std::string>{"0", "1"}, 1,
                                                     std::vector<Elem>{0, 0, 0, 1}, order2(order));
  return std::make_shared<const FiniteSemiring>(mult, 0, std::vector<Elem>{0, 1, 1, 1});
}

SemiringPtr nat_semiring(unsigned threshold, OrderKind order) {
  if (threshold == 0) throw RangeError("saturation threshold must be positive");
  const unsigned n = threshold + 1;
  std::vector<std::string> names(n);
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  std::vector<Elem> add(static_cast<std::size_t>(n) * n);
  BoolMatrix leq(n);
  for (unsigned a = 0; a < n; ++a) {
    names[a] = a == threshold ? std::to_string(a) + "+" : std::to_string(a);
    for (unsigned b = 0; b < n; ++b) {
      add[a * n + b] = std::min(threshold, a + b);
      mul[a * n + b] = std::min<unsigned long>(threshold, static_cast<unsigned long>(a) * b);
      switch (order) {
        case OrderKind::le: leq.set(a, b, a <= b); break;
        case OrderKind::ge: leq.set(a, b, a >= b); break;
        case OrderKind::eq: leq.set(a, b, a == b); break;
      }
    }
  }
  FinitePomonoid m(std::move(names), 1, std::move(mul), std::move(leq));
  auto mult = std::make_shared<const FinitePomonoid>(m.with_saturation(threshold));
  return std::make_shared<const FiniteSemiring>(mult, 0, std::move(add));
}

}  // namespace pmfgalois
