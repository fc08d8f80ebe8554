#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmfgalois/galois.hpp"

namespace pmfgalois {

// ---------------------------------------------------------------------------
// One-point and total extensions

// First b in code order with f + (a, b) in C. Throws PreconditionError unless f is in C.
std::optional<Code> extend_one_point(const BoundedClone& c, const Pmf& f, Code a);
// Fills the missing inputs of f one at a time, in code order.
std::optional<Pmf> total_extension(const BoundedClone& c, const Pmf& f);
// A member f and an input a with no one-point extension, scanning indexed shapes in order.
std::optional<std::pair<Pmf, Code>> one_point_counterexample(const BoundedClone& c);
inline bool one_point_extendable(const BoundedClone& c) { return !one_point_counterexample(c); }

// ---------------------------------------------------------------------------
// Matching extensions

struct HallViolation {
  Pmf within;                   // the maximal member the graph was read from
  std::vector<Code> inputs;     // X
  std::vector<Code> neighbours; // outputs adjacent to X, fewer than |X|
};

struct MatchingResult {
  bool exists = false;
  std::optional<Pmf> extension;  // f + g
  std::optional<Pmf> injection;  // g
  std::optional<Pmf> within;
  std::vector<HallViolation> violations;
  std::string reason;
};

// Injective total g with f + g in C. Throws PreconditionError unless f is in C.
MatchingResult injective_extension(const BoundedClone& c, const Pmf& f);
// Same with g a bijection; needs n = m.
MatchingResult bijective_extension(const BoundedClone& c, const Pmf& f);

// ---------------------------------------------------------------------------
// Ancillas

// g(x) ~ y iff f(x, c) ~ (y, c).
Pmf ancilla_partial(const Pmf& f, Digit c);

struct AncillaStep {
  Pmf source;  // f of arity n + m
  unsigned ancillas = 0;
  Code slice = 0;  // a in B^m
  Pmf derived;     // g of arity n
};

// The total ancilla rule on one slice: f(x, a) = (g(x), a) for all x.
std::optional<Pmf> ancilla_total(const Pmf& f, unsigned ancillas, Code slice);

struct PermutationClosureOptions {
  bool ancilla = false;
  std::size_t member_cap = 1'000'000;
};

class PermutationClone {
 public:
  PermutationClone(unsigned base, unsigned n_max, std::vector<std::vector<std::vector<Code>>> groups,
                   std::vector<Pmf> generators, std::vector<AncillaStep> steps, bool ancilla_closed,
                   bool complete);

  unsigned base() const { return base_; }
  unsigned n_max() const { return n_max_; }
  bool ancilla_closed() const { return ancilla_closed_; }
  bool complete() const { return complete_; }
  const std::vector<Pmf>& generators() const { return generators_; }
  const std::vector<AncillaStep>& ancilla_steps() const { return steps_; }

  std::size_t count(unsigned n) const { return groups_.at(n).size(); }
  bool contains(const Pmf& f) const;
  // Members of arity n as permutations, in pmf order.
  std::vector<Pmf> members(unsigned n) const;
  // Image vectors, sorted; same order as members().
  const std::vector<std::vector<Code>>& images(unsigned n) const { return groups_.at(n); }

 private:
  unsigned base_;
  unsigned n_max_;
  std::vector<std::vector<std::vector<Code>>> groups_;
  std::vector<Pmf> generators_;
  std::vector<AncillaStep> steps_;
  bool ancilla_closed_;
  bool complete_;
};

PermutationClone permutation_clone_closure(std::span<const Pmf> generators, unsigned base, unsigned n_max,
                                           PermutationClosureOptions options = {});

// Every arity class is a group.
bool verify_groups(const PermutationClone& c);
// Every recorded ancilla step still satisfies its defining equation with members of the clone.
bool verify_ancilla_steps(const PermutationClone& c);

// Diagonal values w(x, ..., x) invertible. Throws PreconditionError unless the
// target is commutative and trivially ordered.
bool master_weight_check(const Weight& w);

}  // namespace pmfgalois
