#include <algorithm>
#include <deque>
#include <unordered_set>

#include "pmfgalois/error.hpp"
#include "pmfgalois/galois.hpp"

namespace pmfgalois {

namespace {

constexpr std::uint64_t kHighMasks[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

// Marks every subset of a marked mask.
void down_close(std::vector<std::uint64_t>& bits, std::size_t cells) {
  for (std::size_t b = 0; b < cells; ++b) {
    if (b < 6) {
      const unsigned shift = 1U << b;
      for (auto& word : bits) word |= (word & kHighMasks[b]) >> shift;
    } else {
      const std::size_t stride = std::size_t{1} << (b - 6);
      for (std::size_t w = 0; w < bits.size(); ++w) {
        if (w & stride) bits[w ^ stride] |= bits[w];
      }
    }
  }
}

void keep_maximal(std::vector<Pmf>& v) {
  std::sort(v.begin(), v.end(), [](const Pmf& a, const Pmf& b) { return a.size() > b.size(); });
  std::vector<Pmf> out;
  for (auto& f : v) {
    bool dominated = false;
    for (const auto& g : out) {
      if (f.subset_of(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  v = std::move(out);
}

}  // namespace

BoundedClone::BoundedClone(unsigned base, Caps caps, std::vector<std::vector<Pmf>> maximal_by_shape,
                           std::vector<Pmf> generators, bool complete)
    : base_(base), caps_(caps), maximal_(std::move(maximal_by_shape)),
      generators_(std::move(generators)), complete_(complete) {
  if (caps_.n_max + caps_.m_max > kMaxTotalArity) throw ShapeError("caps exceed the n+m limit");
  const std::size_t slots = static_cast<std::size_t>(caps_.n_max + 1) * (caps_.m_max + 1);
  if (maximal_.size() != slots) throw ShapeError("maximal sets do not match caps");
  index_.resize(slots);
  for (const Shape s : shapes()) {
    auto& v = maximal_[slot(s)];
    for (const auto& f : v) {
      if (f.shape() != s || f.base() != base_) throw ShapeError("maximal element filed under wrong shape");
    }
    keep_maximal(v);
    const Pmf probe(base_, s.n, s.m);
    const std::size_t cells = probe.cells();
    if (cells <= kIndexCellLimit) {
      auto& bits = index_[slot(s)];
      bits.assign(std::max<std::size_t>(1, (std::size_t{1} << cells) / 64), 0);
      for (const auto& f : v) {
        const std::uint64_t mk = f.mask();
        bits[mk >> 6] |= std::uint64_t{1} << (mk & 63);
      }
      down_close(bits, cells);
    }
  }
}

std::vector<Shape> BoundedClone::shapes() const {
  std::vector<Shape> out;
  for (unsigned n = 0; n <= caps_.n_max; ++n) {
    for (unsigned m = 0; m <= caps_.m_max; ++m) out.push_back({n, m});
  }
  return out;
}

void BoundedClone::check_shape(Shape s) const {
  if (!within_caps(s)) {
    throw ShapeError("shape (" + std::to_string(s.n) + "," + std::to_string(s.m) + ") outside caps (" +
                     std::to_string(caps_.n_max) + "," + std::to_string(caps_.m_max) + ")");
  }
}

const std::vector<Pmf>& BoundedClone::maximal(Shape s) const {
  check_shape(s);
  return maximal_[slot(s)];
}

bool BoundedClone::indexed(Shape s) const {
  check_shape(s);
  return !index_[slot(s)].empty();
}

bool BoundedClone::member(const Pmf& f) const {
  check_shape(f.shape());
  if (f.base() != base_) throw ShapeError("pmf over a different base set");
  const auto& bits = index_[slot(f.shape())];
  if (!bits.empty()) {
    const std::uint64_t mk = f.mask();
    return (bits[mk >> 6] >> (mk & 63)) & 1U;
  }
  for (const auto& g : maximal_[slot(f.shape())]) {
    if (f.subset_of(g)) return true;
  }
  return false;
}

std::uint64_t BoundedClone::count(Shape s, std::uint64_t budget) const {
  check_shape(s);
  const auto& bits = index_[slot(s)];
  if (!bits.empty()) {
    std::uint64_t c = 0;
    for (auto w : bits) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }
  return members(s, budget).size();
}

std::vector<Pmf> BoundedClone::members(Shape s, std::uint64_t budget) const {
  check_shape(s);
  std::vector<Pmf> out;
  const auto& bits = index_[slot(s)];
  if (!bits.empty()) {
    for (std::size_t w = 0; w < bits.size(); ++w) {
      std::uint64_t word = bits[w];
      while (word != 0) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(word));
        out.push_back(Pmf::from_mask(base_, s.n, s.m, w * 64 + b));
        word &= word - 1;
      }
    }
  } else {
    std::uint64_t work = 0;
    for (const auto& g : maximal_[slot(s)]) {
      if (g.size() >= 40) throw BudgetError("member enumeration too large");
      work += std::uint64_t{1} << g.size();
    }
    if (work > budget) throw BudgetError("member enumeration exceeds budget");
    std::unordered_set<Pmf, PmfHash> seen;
    for (const auto& g : maximal_[slot(s)]) {
      const auto cells = g.cell_list();
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << cells.size()); ++sub) {
        Pmf f(base_, s.n, s.m);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if ((sub >> i) & 1U) f.set_cell(cells[i]);
        }
        if (seen.insert(f).second) out.push_back(std::move(f));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class AntichainStore {
 public:
  AntichainStore(unsigned base, Caps caps) : base_(base), caps_(caps) {
    sets_.resize(static_cast<std::size_t>(caps.n_max + 1) * (caps.m_max + 1));
  }

  bool fits(Shape s) const { return s.n <= caps_.n_max && s.m <= caps_.m_max; }

  // Returns true when f is new (not below an existing element).
  bool add(Pmf f) {
    auto& v = sets_[slot(f.shape())];
    for (const auto& g : v) {
      if (f.subset_of(g)) return false;
    }
    std::erase_if(v, [&](const Pmf& g) { return g.subset_of(f); });
    v.push_back(f);
    work_.push_back(std::move(f));
    return true;
  }

  bool present(const Pmf& f) const {
    const auto& v = sets_[slot(f.shape())];
    return std::find(v.begin(), v.end(), f) != v.end();
  }

  std::deque<Pmf>& work() { return work_; }
  std::vector<Pmf> snapshot() const {
    std::vector<Pmf> all;
    for (const auto& v : sets_) all.insert(all.end(), v.begin(), v.end());
    return all;
  }
  std::vector<std::vector<Pmf>> release() { return std::move(sets_); }

 private:
  std::size_t slot(Shape s) const { return s.n * (caps_.m_max + 1) + s.m; }

  unsigned base_;
  Caps caps_;
  std::vector<std::vector<Pmf>> sets_;
  std::deque<Pmf> work_;
};

}  // namespace

BoundedClone clone_closure(std::span<const Pmf> generators, unsigned base, Caps caps,
                           std::uint64_t budget) {
  AntichainStore store(base, caps);
  for (unsigned n = 0; n <= std::min(caps.n_max, caps.m_max); ++n) store.add(identity(base, n));
  bool all_le = true;
  bool all_ge = true;
  for (const auto& g : generators) {
    if (g.base() != base) throw ShapeError("generator over a different base set");
    if (!store.fits(g.shape())) throw ShapeError("generator shape outside caps");
    all_le = all_le && g.n() <= g.m();
    all_ge = all_ge && g.n() >= g.m();
    store.add(g);
  }
  bool pruned = false;
  std::uint64_t steps = 0;
  auto& work = store.work();
  while (!work.empty()) {
    Pmf f = std::move(work.front());
    work.pop_front();
    if (!store.present(f)) continue;
    for (const auto& g : store.snapshot()) {
      if (++steps > budget) throw BudgetError("clone closure exceeds budget");
      if (f.m() == g.n()) store.add(compose(g, f));
      if (g.m() == f.n()) store.add(compose(f, g));
      const Shape ps{f.n() + g.n(), f.m() + g.m()};
      if (store.fits(ps)) {
        store.add(product(f, g));
        store.add(product(g, f));
      } else {
        pruned = true;
      }
    }
  }
  // When every generator has n <= m (or every one n >= m) and the caps are
  // square, all subterms of a term within caps are within caps.
  const bool complete = !pruned || (caps.n_max == caps.m_max && (all_le || all_ge));
  std::vector<Pmf> gens(generators.begin(), generators.end());
  return BoundedClone(base, caps, store.release(), std::move(gens), complete);
}

bool verify_closed(const BoundedClone& c) {
  const unsigned b = c.base();
  for (unsigned n = 0; n <= std::min(c.caps().n_max, c.caps().m_max); ++n) {
    if (!c.member(identity(b, n))) return false;
  }
  std::vector<Pmf> all;
  for (const Shape s : c.shapes()) {
    const auto& v = c.maximal(s);
    all.insert(all.end(), v.begin(), v.end());
  }
  for (const auto& f : all) {
    for (const auto& g : all) {
      if (f.m() == g.n() && !c.member(compose(g, f))) return false;
      if (c.within_caps({f.n() + g.n(), f.m() + g.m()}) && !c.member(product(f, g))) return false;
    }
  }
  return true;
}

std::optional<Pmf> first_non_preserving(const BoundedClone& c, const Weight& w, std::uint64_t budget) {
  for (const Shape s : c.shapes()) {
    for (const auto& f : c.maximal(s)) {
      if (!preserves(f, w, budget).preserved) return f;
    }
  }
  return std::nullopt;
}

bool clone_preserves(const BoundedClone& c, std::span<const Weight> ws, std::uint64_t budget) {
  for (const auto& w : ws) {
    if (first_non_preserving(c, w, budget)) return false;
  }
  return true;
}

bool clone_subset(const BoundedClone& a, const BoundedClone& b) {
  for (const Shape s : a.shapes()) {
    for (const auto& f : a.maximal(s)) {
      if (!b.within_caps(s) || !b.member(f)) return false;
    }
  }
  return true;
}

Pmf rows_pmf(const WordPair& wp, unsigned base) {
  const unsigned n = static_cast<unsigned>(wp.left.size());
  const unsigned m = static_cast<unsigned>(wp.right.size());
  Pmf f(base, n, m);
  const Code limit = ipow(base, wp.k);
  for (Code t : wp.left) {
    if (t >= limit) throw RangeError("word letter outside B^k");
  }
  for (Code t : wp.right) {
    if (t >= limit) throw RangeError("word letter outside B^k");
  }
  std::vector<Digit> a(n);
  std::vector<Digit> b(m);
  for (unsigned j = 0; j < wp.k; ++j) {
    for (unsigned i = 0; i < n; ++i) a[i] = digit_at(wp.left[i], wp.k, j, base);
    for (unsigned i = 0; i < m; ++i) b[i] = digit_at(wp.right[i], wp.k, j, base);
    f.insert(encode(a, base), encode(b, base));
  }
  return f;
}

WordPair word_pair_of(const Pmf& f) {
  const auto pairs = f.pairs();
  WordPair wp;
  wp.k = static_cast<unsigned>(pairs.size());
  wp.left.assign(f.n(), 0);
  wp.right.assign(f.m(), 0);
  const unsigned b = f.base();
  for (const auto& [x, y] : pairs) {
    for (unsigned i = 0; i < f.n(); ++i) wp.left[i] = wp.left[i] * b + digit_at(x, f.n(), i, b);
    for (unsigned i = 0; i < f.m(); ++i) wp.right[i] = wp.right[i] * b + digit_at(y, f.m(), i, b);
  }
  return wp;
}

CanonicalResult canonical_leq(const BoundedClone& c, const WordPair& wp) {
  const Shape s{static_cast<unsigned>(wp.left.size()), static_cast<unsigned>(wp.right.size())};
  if (!c.within_caps(s)) throw ShapeError("word lengths outside caps");
  const Pmf rows = rows_pmf(wp, c.base());
  // Search for g in C of this shape with g(a^j) ~ b^j for all rows j.
  for (const auto& g : c.maximal(s)) {
    if (rows.subset_of(g)) return {true, g};
  }
  return {false, std::nullopt};
}

bool member_via_invariants(const BoundedClone& c, const Pmf& f) {
  if (f.base() != c.base()) throw ShapeError("pmf over a different base set");
  return canonical_leq(c, word_pair_of(f)).holds;
}

}  // namespace pmfgalois
