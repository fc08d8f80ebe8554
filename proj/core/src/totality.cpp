#include <algorithm>

#include "pmfgalois/error.hpp"
#include "pmfgalois/totality.hpp"

namespace pmfgalois {

namespace {

void require_member(const BoundedClone& c, const Pmf& f) {
  if (!c.member(f)) throw PreconditionError("pmf is not a member of the clone");
}

bool has_image(const Pmf& f, Code x) {
  for (Code y = 0; y < f.outputs(); ++y) {
    if (f.contains(x, y)) return true;
  }
  return false;
}

class Matcher {
 public:
  Matcher(const Pmf& f, const Pmf& within) : inputs_(within.inputs()), outputs_(within.outputs()) {
    adj_.resize(inputs_);
    for (Code x = 0; x < inputs_; ++x) {
      for (Code y = 0; y < outputs_; ++y) {
        if (f.contains(x, y)) adj_[x].push_back(y);
      }
      for (Code y = 0; y < outputs_; ++y) {
        if (within.contains(x, y) && !f.contains(x, y)) adj_[x].push_back(y);
      }
    }
    match_left_.assign(inputs_, kNone);
    match_right_.assign(outputs_, kNone);
  }

  // True when every input is matched.
  bool run() {
    bool perfect = true;
    for (Code x = 0; x < inputs_; ++x) {
      seen_.assign(outputs_, false);
      if (!augment(x)) perfect = false;
    }
    return perfect;
  }

  Code partner(Code x) const { return match_left_[x]; }

  // Alternating-path closure of the first unmatched input.
  std::pair<std::vector<Code>, std::vector<Code>> hall_set() const {
    std::vector<bool> left(inputs_, false);
    std::vector<bool> right(outputs_, false);
    Code start = 0;
    while (match_left_[start] != kNone) ++start;
    std::vector<Code> stack{start};
    left[start] = true;
    while (!stack.empty()) {
      Code x = stack.back();
      stack.pop_back();
      for (Code y : adj_[x]) {
        if (right[y]) continue;
        right[y] = true;
        Code z = match_right_[y];
        if (z != kNone && !left[z]) {
          left[z] = true;
          stack.push_back(z);
        }
      }
    }
    std::pair<std::vector<Code>, std::vector<Code>> out;
    for (Code x = 0; x < inputs_; ++x) {
      if (left[x]) out.first.push_back(x);
    }
    for (Code y = 0; y < outputs_; ++y) {
      if (right[y]) out.second.push_back(y);
    }
    return out;
  }

 private:
  static constexpr Code kNone = ~Code{0};

  bool augment(Code x) {
    for (Code y : adj_[x]) {
      if (seen_[y]) continue;
      seen_[y] = true;
      if (match_right_[y] == kNone || augment(match_right_[y])) {
        match_left_[x] = y;
        match_right_[y] = x;
        return true;
      }
    }
    return false;
  }

  Code inputs_;
  Code outputs_;
  std::vector<std::vector<Code>> adj_;
  std::vector<Code> match_left_;
  std::vector<Code> match_right_;
  std::vector<bool> seen_;
};

MatchingResult matching_extension(const BoundedClone& c, const Pmf& f) {
  require_member(c, f);
  MatchingResult r;
  for (const auto& big : c.maximal(f.shape())) {
    if (!f.subset_of(big)) continue;
    Matcher mt(f, big);
    if (mt.run()) {
      Pmf g(f.base(), f.n(), f.m());
      for (Code x = 0; x < f.inputs(); ++x) g.insert(x, mt.partner(x));
      Pmf ext = pmf_union(f, g);
      if (!c.member(ext)) throw Error("matching produced a non-member");
      r.exists = true;
      r.extension = std::move(ext);
      r.injection = std::move(g);
      r.within = big;
      r.violations.clear();
      return r;
    }
    auto [xs, ys] = mt.hall_set();
    r.violations.push_back({big, std::move(xs), std::move(ys)});
  }
  r.reason = "no maximal member containing f admits a matching of all inputs";
  return r;
}

}  // namespace

std::optional<Code> extend_one_point(const BoundedClone& c, const Pmf& f, Code a) {
  require_member(c, f);
  if (a >= f.inputs()) throw RangeError("input tuple out of range");
  Pmf g = f;
  for (Code b = 0; b < f.outputs(); ++b) {
    const bool had = g.contains(a, b);
    g.insert(a, b);
    if (c.member(g)) return b;
    if (!had) g.erase(a, b);
  }
  return std::nullopt;
}

std::optional<Pmf> total_extension(const BoundedClone& c, const Pmf& f) {
  require_member(c, f);
  Pmf g = f;
  for (Code x = 0; x < g.inputs(); ++x) {
    if (has_image(g, x)) continue;
    auto b = extend_one_point(c, g, x);
    if (!b) return std::nullopt;
    g.insert(x, *b);
  }
  return g;
}

std::optional<std::pair<Pmf, Code>> one_point_counterexample(const BoundedClone& c) {
  for (const Shape s : c.shapes()) {
    if (!c.indexed(s) || !c.inhabited(s)) continue;
    for (const auto& f : c.members(s)) {
      for (Code a = 0; a < f.inputs(); ++a) {
        if (has_image(f, a)) continue;
        if (!extend_one_point(c, f, a)) return std::make_pair(f, a);
      }
    }
  }
  return std::nullopt;
}

MatchingResult injective_extension(const BoundedClone& c, const Pmf& f) {
  if (f.inputs() > f.outputs()) {
    require_member(c, f);
    MatchingResult r;
    r.reason = "no injection from a larger power";
    return r;
  }
  return matching_extension(c, f);
}

MatchingResult bijective_extension(const BoundedClone& c, const Pmf& f) {
  if (f.inputs() != f.outputs()) {
    require_member(c, f);
    MatchingResult r;
    r.reason = "input and output powers differ in size";
    return r;
  }
  return matching_extension(c, f);
}

Pmf ancilla_partial(const Pmf& f, Digit c) {
  if (f.n() == 0 || f.m() == 0) throw ShapeError("ancilla rule needs an input and an output wire");
  if (c >= f.base()) throw RangeError("ancilla value out of range");
  const unsigned b = f.base();
  Pmf g(b, f.n() - 1, f.m() - 1);
  for (const auto& [x, y] : f.pairs()) {
    if (x % b == c && y % b == c) g.insert(x / b, y / b);
  }
  return g;
}

std::optional<Pmf> ancilla_total(const Pmf& f, unsigned ancillas, Code slice) {
  if (f.n() != f.m() || ancillas > f.n()) throw ShapeError("ancilla slice does not fit the permutation");
  const Code width = ipow(f.base(), ancillas);
  if (slice >= width) throw RangeError("ancilla slice out of range");
  const unsigned n = f.n() - ancillas;
  Pmf g(f.base(), n, n);
  for (Code x = 0; x < g.inputs(); ++x) {
    auto ys = f.image(x * width + slice);
    if (ys.size() != 1 || ys[0] % width != slice) return std::nullopt;
    g.insert(x, ys[0] / width);
  }
  return g;
}

bool master_weight_check(const Weight& w) {
  const auto& m = w.target();
  if (!is_commutative(m) || !is_trivially_ordered(m)) {
    throw PreconditionError("not a permutation weight: target must be commutative and trivially ordered");
  }
  const Code stride = w.k() == 0 ? 0 : (ipow(w.base(), w.k()) - 1) / (w.base() - 1);
  for (Digit x = 0; x < w.base(); ++x) {
    if (!element_predicates(m, w(stride * x)).invertible) return false;
  }
  return true;
}

}  // namespace pmfgalois
