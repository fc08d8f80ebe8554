#include "pmfgalois/pmf.hpp"

#include <algorithm>
#include <string>

#include "pmfgalois/config.hpp"
#include "pmfgalois/error.hpp"

namespace pmfgalois {

namespace {

void require_same_base(const Pmf& f, const Pmf& g) {
  if (f.base() != g.base()) throw ShapeError("pmfs over different base sets");
}

}  // namespace

Pmf::Pmf(unsigned base, unsigned n, unsigned m) : base_(base), n_(n), m_(m) {
  if (base > kMaxBase) throw ShapeError("base size exceeds cap");
  if (n + m > kMaxTotalArity) {
    throw ShapeError("shape (" + std::to_string(n) + "," + std::to_string(m) +
                     ") exceeds n+m cap " + std::to_string(kMaxTotalArity));
  }
  inputs_ = ipow(base, n);
  outputs_ = ipow(base, m);
  words_.assign((cells() + 63) / 64, 0);
  if (words_.empty()) words_.push_back(0);
}

Pmf Pmf::from_pairs(unsigned base, unsigned n, unsigned m,
                    std::span<const std::pair<Code, Code>> pairs) {
  Pmf f(base, n, m);
  for (const auto& [x, y] : pairs) f.insert(x, y);
  return f;
}

Pmf Pmf::from_mask(unsigned base, unsigned n, unsigned m, std::uint64_t mask) {
  Pmf f(base, n, m);
  if (f.cells() > 64) throw ShapeError("mask construction needs at most 64 cells");
  if (f.cells() < 64 && (mask >> f.cells()) != 0) throw RangeError("mask has bits outside the shape");
  f.words_[0] = mask;
  return f;
}

Pmf Pmf::from_function(unsigned base, unsigned n, unsigned m,
                       const std::function<Code(Code)>& fn) {
  Pmf f(base, n, m);
  for (Code x = 0; x < f.inputs(); ++x) f.insert(x, fn(x));
  return f;
}

void Pmf::insert(Code x, Code y) {
  if (x >= inputs_ || y >= outputs_) throw RangeError("pair outside pmf shape");
  set_cell(static_cast<std::size_t>(x * outputs_ + y));
}

void Pmf::erase(Code x, Code y) {
  if (x >= inputs_ || y >= outputs_) throw RangeError("pair outside pmf shape");
  reset_cell(static_cast<std::size_t>(x * outputs_ + y));
}

std::size_t Pmf::size() const {
  std::size_t s = 0;
  for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
  return s;
}

bool Pmf::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::pair<Code, Code>> Pmf::pairs() const {
  std::vector<std::pair<Code, Code>> out;
  for_each_cell([&](std::size_t c) { out.emplace_back(c / outputs_, c % outputs_); });
  return out;
}

std::vector<std::size_t> Pmf::cell_list() const {
  std::vector<std::size_t> out;
  for_each_cell([&](std::size_t c) { out.push_back(c); });
  return out;
}

std::vector<Code> Pmf::image(Code x) const {
  std::vector<Code> out;
  for (Code y = 0; y < outputs_; ++y) {
    if (contains(x, y)) out.push_back(y);
  }
  return out;
}

bool Pmf::subset_of(const Pmf& g) const {
  if (base_ != g.base_ || n_ != g.n_ || m_ != g.m_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~g.words_[i]) != 0) return false;
  }
  return true;
}

std::uint64_t Pmf::mask() const {
  if (cells() > 64) throw ShapeError("mask needs at most 64 cells");
  return words_[0];
}

std::size_t Pmf::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(base_);
  mix(n_);
  mix(m_);
  for (auto w : words_) mix(w);
  return static_cast<std::size_t>(h);
}

bool operator==(const Pmf& a, const Pmf& b) {
  return a.base_ == b.base_ && a.n_ == b.n_ && a.m_ == b.m_ && a.words_ == b.words_;
}

bool operator<(const Pmf& a, const Pmf& b) {
  if (a.base_ != b.base_) return a.base_ < b.base_;
  if (a.shape() != b.shape()) return a.shape() < b.shape();
  auto la = a.cell_list();
  auto lb = b.cell_list();
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
}

Pmf identity(unsigned base, unsigned n) {
  Pmf f(base, n, n);
  for (Code x = 0; x < f.inputs(); ++x) f.insert(x, x);
  return f;
}

Pmf compose(const Pmf& g, const Pmf& f) {
  require_same_base(f, g);
  if (f.m() != g.n()) {
    throw ShapeError("compose: output arity " + std::to_string(f.m()) +
                     " does not match input arity " + std::to_string(g.n()));
  }
  Pmf h(f.base(), f.n(), g.m());
  const Code mid = f.outputs();
  const Code out = g.outputs();
  f.for_each_cell([&](std::size_t c) {
    Code x = c / mid;
    Code y = c % mid;
    for (Code z = 0; z < out; ++z) {
      if (g.contains(y, z)) h.insert(x, z);
    }
  });
  return h;
}

Pmf product(const Pmf& f, const Pmf& g) {
  require_same_base(f, g);
  Pmf h(f.base(), f.n() + g.n(), f.m() + g.m());
  auto fp = f.pairs();
  auto gp = g.pairs();
  for (const auto& [x, y] : fp) {
    for (const auto& [x2, y2] : gp) {
      h.insert(x * g.inputs() + x2, y * g.outputs() + y2);
    }
  }
  return h;
}

Pmf inverse(const Pmf& f) {
  Pmf h(f.base(), f.m(), f.n());
  f.for_each_cell([&](std::size_t c) { h.insert(c % f.outputs(), c / f.outputs()); });
  return h;
}

Pmf pmf_union(const Pmf& f, const Pmf& g) {
  require_same_base(f, g);
  if (f.shape() != g.shape()) throw ShapeError("union of pmfs with different shapes");
  Pmf h = f;
  g.for_each_cell([&](std::size_t c) { h.set_cell(c); });
  return h;
}

bool is_total(const Pmf& f) {
  for (Code x = 0; x < f.inputs(); ++x) {
    bool any = false;
    for (Code y = 0; y < f.outputs() && !any; ++y) any = f.contains(x, y);
    if (!any) return false;
  }
  return true;
}

bool is_univalued(const Pmf& f) {
  for (Code x = 0; x < f.inputs(); ++x) {
    int count = 0;
    for (Code y = 0; y < f.outputs(); ++y) count += f.contains(x, y) ? 1 : 0;
    if (count > 1) return false;
  }
  return true;
}

bool is_injective(const Pmf& f) { return is_univalued(inverse(f)); }

bool is_surjective(const Pmf& f) { return is_total(inverse(f)); }

bool is_permutation(const Pmf& f) {
  return f.n() == f.m() && is_total(f) && is_univalued(f) && is_injective(f) && is_surjective(f);
}

bool is_subfunction_of(const Pmf& f, const Pmf& g) { return f.subset_of(g); }

PmfPredicates predicates(const Pmf& f) {
  return {is_total(f), is_univalued(f), is_injective(f), is_surjective(f), is_permutation(f)};
}

Pmf swap_gate(unsigned base) {
  const unsigned rho[2] = {1, 0};
  return variable_permutation(base, rho);
}

Pmf variable_permutation(unsigned base, std::span<const unsigned> rho) {
  const unsigned n = static_cast<unsigned>(rho.size());
  std::vector<bool> seen(n, false);
  for (unsigned r : rho) {
    if (r >= n || seen[r]) throw RangeError("variable permutation is not a bijection of coordinates");
    seen[r] = true;
  }
  Pmf f(base, n, n);
  std::vector<Digit> out(n);
  for (Code x = 0; x < f.inputs(); ++x) {
    auto in = decode(x, n, base);
    for (unsigned i = 0; i < n; ++i) out[i] = in[rho[i]];
    f.insert(x, encode(out, base));
  }
  return f;
}

Pmf diagonal(unsigned base, unsigned m) {
  Pmf f(base, 1, m);
  std::vector<Digit> out(m);
  for (Digit x = 0; x < base; ++x) {
    std::fill(out.begin(), out.end(), x);
    f.insert(x, encode(out, base));
  }
  return f;
}

Pmf projection(unsigned base, unsigned n, unsigned i) {
  if (i >= n) throw RangeError("projection index out of range");
  Pmf f(base, n, 1);
  for (Code x = 0; x < f.inputs(); ++x) f.insert(x, digit_at(x, n, i, base));
  return f;
}

Pmf constant(unsigned base, Digit c) {
  if (c >= base) throw RangeError("constant outside base");
  Pmf f(base, 0, 1);
  f.insert(0, c);
  return f;
}

Pmf empty_pmf(unsigned base, unsigned n, unsigned m) { return Pmf(base, n, m); }

}  // namespace pmfgalois
