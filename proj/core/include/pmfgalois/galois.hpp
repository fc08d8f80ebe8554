#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmfgalois/config.hpp"
#include "pmfgalois/pmf.hpp"
#include "pmfgalois/weight.hpp"

namespace pmfgalois {

// ---------------------------------------------------------------------------
// Preservation

struct PreservationWitness {
  unsigned k = 0;
  std::vector<Code> rows_in;   // a^j in B^n, j < k
  std::vector<Code> rows_out;  // b^j in B^m, j < k
  std::vector<Code> cols_in;   // a_i in B^k, i < n
  std::vector<Code> cols_out;  // b_i in B^k, i < m
  Elem lhs = 0;
  Elem rhs = 0;
};

struct PreservationResult {
  bool preserved = true;
  std::optional<PreservationWitness> witness;
  bool saturated = false;
  std::uint64_t matrices = 0;
};

// Checks every k-row matrix of graph pairs, rows in increasing cell order.
PreservationResult preserves(const Pmf& f, const Weight& w, std::uint64_t budget = kDefaultBudget);
// Same check restricted to matrices that use the given cell of f at least once.
PreservationResult preserves_with_cell(const Pmf& f, std::size_t cell, const Weight& w,
                                       std::uint64_t budget = kDefaultBudget);
bool preserves_all(const Pmf& f, std::span<const Weight> ws, std::uint64_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Bounded clones

// A down-closed set of pmfs within caps, stored by the maximal elements of each shape.
class BoundedClone {
 public:
  BoundedClone(unsigned base, Caps caps, std::vector<std::vector<Pmf>> maximal_by_shape,
               std::vector<Pmf> generators, bool complete);

  unsigned base() const { return base_; }
  const Caps& caps() const { return caps_; }
  bool complete() const { return complete_; }
  const std::vector<Pmf>& generators() const { return generators_; }

  bool within_caps(Shape s) const { return s.n <= caps_.n_max && s.m <= caps_.m_max; }
  std::vector<Shape> shapes() const;
  const std::vector<Pmf>& maximal(Shape s) const;
  bool inhabited(Shape s) const { return !maximal(s).empty(); }
  bool indexed(Shape s) const;

  // Index lookup; throws ShapeError outside caps.
  bool member(const Pmf& f) const;
  std::uint64_t count(Shape s, std::uint64_t budget = kDefaultBudget) const;
  // Members of one shape in pmf order.
  std::vector<Pmf> members(Shape s, std::uint64_t budget = kDefaultBudget) const;

  friend bool operator==(const BoundedClone& a, const BoundedClone& b) {
    return a.base_ == b.base_ && a.caps_.n_max == b.caps_.n_max && a.caps_.m_max == b.caps_.m_max &&
           a.maximal_ == b.maximal_;
  }

 private:
  std::size_t slot(Shape s) const { return s.n * (caps_.m_max + 1) + s.m; }
  void check_shape(Shape s) const;

  unsigned base_;
  Caps caps_;
  std::vector<std::vector<Pmf>> maximal_;
  std::vector<std::vector<std::uint64_t>> index_;  // bitset over pmf masks, empty when unindexed
  std::vector<Pmf> generators_;
  bool complete_;
};

// Shapes with at most this many cells get a dense member index.
inline constexpr std::size_t kIndexCellLimit = 20;

BoundedClone clone_closure(std::span<const Pmf> generators, unsigned base, Caps caps,
                           std::uint64_t budget = kDefaultBudget);
bool verify_closed(const BoundedClone& c);
// Every maximal member preserves w; enough because preservation is down-closed.
std::optional<Pmf> first_non_preserving(const BoundedClone& c, const Weight& w,
                                        std::uint64_t budget = kDefaultBudget);
bool clone_preserves(const BoundedClone& c, std::span<const Weight> ws,
                     std::uint64_t budget = kDefaultBudget);
bool clone_subset(const BoundedClone& a, const BoundedClone& b);

// ---------------------------------------------------------------------------
// Canonical invariants

struct WordPair {
  unsigned k = 0;
  std::vector<Code> left;   // n tuples in B^k
  std::vector<Code> right;  // m tuples in B^k
};

struct CanonicalResult {
  bool holds = false;
  std::optional<Pmf> witness;
};

Pmf rows_pmf(const WordPair& wp, unsigned base);
WordPair word_pair_of(const Pmf& f);
CanonicalResult canonical_leq(const BoundedClone& c, const WordPair& wp);
bool member_via_invariants(const BoundedClone& c, const Pmf& f);

// ---------------------------------------------------------------------------
// Polymorphisms

enum class PmfFamily { all, functions, permutations };

BoundedClone pol_bounded(std::span<const Weight> ws, unsigned base, Caps caps,
                         std::uint64_t budget = kDefaultBudget);
// Members of pol(ws) of one shape within a family of total pmfs, in pmf order.
std::vector<Pmf> pol_family(std::span<const Weight> ws, unsigned base, Shape shape, PmfFamily family,
                            std::uint64_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Restrictions

struct RestrictionReport {
  bool closed = false;
  bool complete = false;
  bool n_le_m = true;
  bool n_ge_m = true;
  bool n_eq_m = true;
  bool univalued_only = true;
  bool injective_only = true;
  std::optional<bool> contains_swap;
  std::optional<bool> contains_diagonals;
  std::optional<bool> contains_constants;
  std::optional<bool> contains_projections;
  bool inverse_closed = true;
  std::vector<Shape> shape_preorder;
};

RestrictionReport restriction_report(const BoundedClone& c);

enum class FragmentStatus { holds, fails, inapplicable };

struct FragmentResult {
  FragmentStatus status = FragmentStatus::inapplicable;
  std::optional<Pmf> counterexample;
  std::string reason;
};

// f in C iff every pi_{m,i} o f in C, over all indexed shapes with m >= 1.
FragmentResult unary_fragment_check(const BoundedClone& c);

}  // namespace pmfgalois
