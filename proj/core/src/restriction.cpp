#include <algorithm>
#include <numeric>

#include "pmfgalois/galois.hpp"

namespace pmfgalois {

namespace {

bool contains_all_variable_permutations(const BoundedClone& c, unsigned arity) {
  std::vector<unsigned> rho(arity);
  std::iota(rho.begin(), rho.end(), 0U);
  do {
    if (!c.member(variable_permutation(c.base(), rho))) return false;
  } while (std::next_permutation(rho.begin(), rho.end()));
  return true;
}

}  // namespace

RestrictionReport restriction_report(const BoundedClone& c) {
  RestrictionReport r;
  r.closed = verify_closed(c);
  r.complete = c.complete();
  const unsigned b = c.base();
  const Caps& caps = c.caps();
  for (const Shape s : c.shapes()) {
    if (!c.inhabited(s)) continue;
    r.shape_preorder.push_back(s);
    r.n_le_m = r.n_le_m && s.n <= s.m;
    r.n_ge_m = r.n_ge_m && s.n >= s.m;
    r.n_eq_m = r.n_eq_m && s.n == s.m;
    for (const auto& f : c.maximal(s)) {
      r.univalued_only = r.univalued_only && is_univalued(f);
      r.injective_only = r.injective_only && is_injective(f);
      if (c.within_caps({s.m, s.n}) && !c.member(inverse(f))) r.inverse_closed = false;
    }
  }
  if (caps.n_max >= 2 && caps.m_max >= 2) r.contains_swap = c.member(swap_gate(b));
  if (caps.n_max >= 1) {
    bool all = true;
    for (unsigned m = 0; m <= caps.m_max; ++m) all = all && c.member(diagonal(b, m));
    r.contains_diagonals = all;
  }
  if (caps.m_max >= 1) {
    bool all = true;
    for (Digit v = 0; v < b; ++v) all = all && c.member(constant(b, v));
    r.contains_constants = all;
  }
  if (caps.m_max >= 1 && caps.n_max >= 1) {
    bool all = true;
    for (unsigned n = 1; n <= caps.n_max; ++n) {
      for (unsigned i = 0; i < n; ++i) all = all && c.member(projection(b, n, i));
    }
    r.contains_projections = all;
  }
  return r;
}

FragmentResult unary_fragment_check(const BoundedClone& c) {
  FragmentResult r;
  const unsigned b = c.base();
  const Caps& caps = c.caps();
  if (caps.m_max < 1 || caps.n_max < 1) {
    r.reason = "caps admit no unary-output shapes";
    return r;
  }
  for (unsigned a = 2; a <= std::min(caps.n_max, caps.m_max); ++a) {
    if (!contains_all_variable_permutations(c, a)) {
      r.reason = "missing variable permutations of arity " + std::to_string(a);
      return r;
    }
  }
  for (unsigned m = 2; m <= caps.m_max; ++m) {
    if (!c.member(diagonal(b, m))) {
      r.reason = "missing diagonal of arity " + std::to_string(m);
      return r;
    }
  }
  for (unsigned n = 1; n <= caps.n_max; ++n) {
    for (unsigned i = 0; i < n; ++i) {
      if (!c.member(projection(b, n, i))) {
        r.reason = "missing projections of arity " + std::to_string(n);
        return r;
      }
    }
  }
  for (const Shape s : c.shapes()) {
    if (s.m == 0 || !c.indexed(s)) continue;
    std::vector<Pmf> projs;
    for (unsigned i = 0; i < s.m; ++i) projs.push_back(projection(b, s.m, i));
    const Pmf probe(b, s.n, s.m);
    const std::uint64_t total = std::uint64_t{1} << probe.cells();
    for (std::uint64_t mk = 0; mk < total; ++mk) {
      const Pmf f = Pmf::from_mask(b, s.n, s.m, mk);
      bool rhs = true;
      for (const auto& p : projs) rhs = rhs && c.member(compose(p, f));
      if (rhs != c.member(f)) {
        r.status = FragmentStatus::fails;
        r.counterexample = f;
        return r;
      }
    }
  }
  r.status = FragmentStatus::holds;
  return r;
}

}  // namespace pmfgalois
