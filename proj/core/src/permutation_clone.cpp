#include <algorithm>
#include <numeric>
#include <set>

#include "pmfgalois/error.hpp"
#include "pmfgalois/totality.hpp"

namespace pmfgalois {

namespace {

using Perm = std::vector<Code>;

Perm perm_of(const Pmf& f) {
  Perm p(f.inputs());
  for (Code x = 0; x < f.inputs(); ++x) p[x] = f.image(x).front();
  return p;
}

Pmf pmf_of(const Perm& p, unsigned base, unsigned n) {
  Pmf f(base, n, n);
  for (Code x = 0; x < p.size(); ++x) f.insert(x, p[x]);
  return f;
}

Perm identity_perm(Code size) {
  Perm p(size);
  std::iota(p.begin(), p.end(), Code{0});
  return p;
}

// p x id on n + extra wires.
Perm widen(const Perm& p, Code extra_width) {
  Perm out(p.size() * extra_width);
  for (Code x = 0; x < p.size(); ++x) {
    for (Code z = 0; z < extra_width; ++z) out[x * extra_width + z] = p[x] * extra_width + z;
  }
  return out;
}

struct GroupResult {
  std::vector<Perm> elements;
  bool complete = true;
};

GroupResult generate_group(const std::vector<Perm>& gens, Code size, std::size_t cap) {
  GroupResult r;
  std::set<Perm> seen;
  std::vector<Perm> frontier{identity_perm(size)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        Perm q(size);
        for (Code x = 0; x < size; ++x) q[x] = g[p[x]];
        if (seen.count(q) != 0) continue;
        if (seen.size() >= cap) {
          r.complete = false;
          r.elements.assign(seen.begin(), seen.end());
          return r;
        }
        seen.insert(q);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  r.elements.assign(seen.begin(), seen.end());
  return r;
}

std::vector<Perm> adjacent_transpositions(unsigned base, unsigned n) {
  std::vector<Perm> out;
  for (unsigned i = 0; i + 1 < n; ++i) {
    std::vector<unsigned> rho(n);
    std::iota(rho.begin(), rho.end(), 0U);
    std::swap(rho[i], rho[i + 1]);
    out.push_back(perm_of(variable_permutation(base, rho)));
  }
  return out;
}

// Rebuilds <T> greedily from elements of S; S is a group iff it equals the span it generates.
bool is_group(const std::vector<Perm>& elems, Code size) {
  if (elems.empty()) return false;
  if (!std::binary_search(elems.begin(), elems.end(), identity_perm(size))) return false;
  std::vector<Perm> t;
  std::set<Perm> span{identity_perm(size)};
  for (const auto& s : elems) {
    if (span.count(s) != 0) continue;
    t.push_back(s);
    auto gr = generate_group(t, size, elems.size() + 1);
    if (!gr.complete) return false;
    span = std::set<Perm>(gr.elements.begin(), gr.elements.end());
    for (const auto& p : span) {
      if (!std::binary_search(elems.begin(), elems.end(), p)) return false;
    }
  }
  return span.size() == elems.size();
}

}  // namespace

PermutationClone::PermutationClone(unsigned base, unsigned n_max,
                                   std::vector<std::vector<std::vector<Code>>> groups,
                                   std::vector<Pmf> generators, std::vector<AncillaStep> steps,
                                   bool ancilla_closed, bool complete)
    : base_(base),
      n_max_(n_max),
      groups_(std::move(groups)),
      generators_(std::move(generators)),
      steps_(std::move(steps)),
      ancilla_closed_(ancilla_closed),
      complete_(complete) {}

bool PermutationClone::contains(const Pmf& f) const {
  if (f.base() != base_ || f.n() != f.m() || f.n() > n_max_) {
    throw ShapeError("permutation outside the clone's caps");
  }
  if (!is_permutation(f)) return false;
  const auto& g = groups_[f.n()];
  return std::binary_search(g.begin(), g.end(), perm_of(f));
}

std::vector<Pmf> PermutationClone::members(unsigned n) const {
  std::vector<Pmf> out;
  for (const auto& p : groups_.at(n)) out.push_back(pmf_of(p, base_, n));
  return out;
}

PermutationClone permutation_clone_closure(std::span<const Pmf> generators, unsigned base, unsigned n_max,
                                           PermutationClosureOptions options) {
  BaseSet check(base);
  if (n_max > kMaxTotalArity / 2) throw ShapeError("permutation arity cap too large");
  std::vector<std::vector<Perm>> own(n_max + 1);
  std::vector<Pmf> gens;
  for (const auto& g : generators) {
    if (g.base() != base) throw ShapeError("generator over a different base set");
    if (!is_permutation(g)) throw PreconditionError("generator is not a permutation");
    if (g.n() > n_max) throw ShapeError("generator arity exceeds the cap");
    own[g.n()].push_back(perm_of(g));
    gens.push_back(g);
  }
  std::vector<AncillaStep> steps;
  std::vector<std::vector<Perm>> groups(n_max + 1);
  bool complete = true;
  while (true) {
    // Generating sets per arity: own generators, variable permutations, and widened lower generators.
    std::vector<std::vector<Perm>> span_gens(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
      const Code size = ipow(base, n);
      auto& sg = span_gens[n];
      sg = own[n];
      for (auto& t : adjacent_transpositions(base, n)) sg.push_back(std::move(t));
      for (unsigned a = 1; a < n; ++a) {
        for (const auto& p : span_gens[a]) sg.push_back(widen(p, ipow(base, n - a)));
      }
      std::sort(sg.begin(), sg.end());
      sg.erase(std::unique(sg.begin(), sg.end()), sg.end());
      auto gr = generate_group(sg, size, options.member_cap);
      complete = complete && gr.complete;
      groups[n] = std::move(gr.elements);
    }
    if (!options.ancilla) break;
    bool changed = false;
    for (unsigned total = 2; total <= n_max; ++total) {
      for (const auto& p : groups[total]) {
        const Pmf f = pmf_of(p, base, total);
        for (unsigned m = 1; m < total; ++m) {
          const unsigned n = total - m;
          for (Code a = 0; a < ipow(base, m); ++a) {
            auto g = ancilla_total(f, m, a);
            if (!g) continue;
            Perm q = perm_of(*g);
            if (std::binary_search(groups[n].begin(), groups[n].end(), q)) continue;
            if (std::find(own[n].begin(), own[n].end(), q) != own[n].end()) continue;
            own[n].push_back(q);
            steps.push_back({f, m, a, *g});
            changed = true;
          }
        }
      }
    }
    if (!changed) break;
  }
  return PermutationClone(base, n_max, std::move(groups), std::move(gens), std::move(steps), options.ancilla,
                          complete);
}

bool verify_groups(const PermutationClone& c) {
  for (unsigned n = 0; n <= c.n_max(); ++n) {
    const Code size = ipow(c.base(), n);
    if (!is_group(c.images(n), size)) return false;
    std::vector<unsigned> rho(n);
    std::iota(rho.begin(), rho.end(), 0U);
    do {
      if (!c.contains(variable_permutation(c.base(), rho))) return false;
    } while (std::next_permutation(rho.begin(), rho.end()));
  }
  return true;
}

bool verify_ancilla_steps(const PermutationClone& c) {
  for (const auto& s : c.ancilla_steps()) {
    if (!c.contains(s.source) || !c.contains(s.derived)) return false;
    auto g = ancilla_total(s.source, s.ancillas, s.slice);
    if (!g || !(*g == s.derived)) return false;
  }
  if (!c.ancilla_closed()) return true;
  for (unsigned total = 2; total <= c.n_max(); ++total) {
    for (const auto& f : c.members(total)) {
      for (unsigned m = 1; m < total; ++m) {
        for (Code a = 0; a < ipow(c.base(), m); ++a) {
          auto g = ancilla_total(f, m, a);
          if (g && !c.contains(*g)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace pmfgalois
