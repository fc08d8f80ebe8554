#include <algorithm>

#include "pmfgalois/error.hpp"
#include "pmfgalois/galois.hpp"

namespace pmfgalois {

namespace {

bool test_bit(const std::vector<std::uint64_t>& bits, std::uint64_t i) {
  return (bits[i >> 6] >> (i & 63)) & 1U;
}

void set_bit(std::vector<std::uint64_t>& bits, std::uint64_t i) {
  bits[i >> 6] |= std::uint64_t{1} << (i & 63);
}

class ShapeSearch {
 public:
  ShapeSearch(std::span<const Weight> ws, unsigned base, Shape s, std::uint64_t budget)
      : ws_(ws), cur_(base, s.n, s.m), budget_(budget) {
    cells_ = cur_.cells();
    bits_.assign(std::max<std::size_t>(1, (std::size_t{1} << cells_) / 64), 0);
  }

  std::vector<Pmf> run() {
    if (!preserves_all(cur_, ws_, budget_)) return {};
    set_bit(bits_, 0);
    dfs(0, 0);
    std::vector<Pmf> maximal;
    const std::uint64_t total = std::uint64_t{1} << cells_;
    for (std::uint64_t mk = 0; mk < total; ++mk) {
      if (!test_bit(bits_, mk)) continue;
      bool is_max = true;
      for (std::size_t c = 0; c < cells_ && is_max; ++c) {
        const std::uint64_t up = mk | (std::uint64_t{1} << c);
        if (up != mk && test_bit(bits_, up)) is_max = false;
      }
      if (is_max) maximal.push_back(Pmf::from_mask(cur_.base(), cur_.n(), cur_.m(), mk));
    }
    return maximal;
  }

 private:
  // Exclude-first order guarantees that every T minus one element is decided before T.
  void dfs(std::size_t c, std::uint64_t mask) {
    if (c == cells_) return;
    if (++steps_ > budget_) throw BudgetError("polymorphism search exceeds budget");
    if (cells_ - c >= kShortcutCells && whole_subtree(c, mask)) return;
    dfs(c + 1, mask);
    const std::uint64_t t = mask | (std::uint64_t{1} << c);
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const std::uint64_t d = rest & (~rest + 1);
      if (!test_bit(bits_, t ^ d)) return;
    }
    cur_.set_cell(c);
    bool ok = true;
    for (const auto& w : ws_) {
      if (!preserves_with_cell(cur_, c, w, budget_).preserved) {
        ok = false;
        break;
      }
    }
    if (ok) {
      set_bit(bits_, t);
      dfs(c + 1, t);
    }
    cur_.reset_cell(c);
  }

  // When mask plus every remaining cell is preserved, so is each set in between.
  bool whole_subtree(std::size_t c, std::uint64_t mask) {
    const std::uint64_t rest = ((std::uint64_t{1} << cells_) - 1) & ~((std::uint64_t{1} << c) - 1);
    const Pmf top = Pmf::from_mask(cur_.base(), cur_.n(), cur_.m(), mask | rest);
    if (!preserves_all(top, ws_, budget_)) return false;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      set_bit(bits_, mask | sub);
      if (sub == 0) break;
    }
    return true;
  }

  static constexpr std::size_t kShortcutCells = 12;

  std::span<const Weight> ws_;
  Pmf cur_;
  std::size_t cells_;
  std::vector<std::uint64_t> bits_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

}  // namespace

BoundedClone pol_bounded(std::span<const Weight> ws, unsigned base, Caps caps, std::uint64_t budget) {
  for (const auto& w : ws) {
    if (w.base() != base) throw ShapeError("weight over a different base set");
  }
  std::vector<std::vector<Pmf>> maximal(static_cast<std::size_t>(caps.n_max + 1) * (caps.m_max + 1));
  bool complete = true;
  for (unsigned n = 0; n <= caps.n_max; ++n) {
    for (unsigned m = 0; m <= caps.m_max; ++m) {
      const Pmf probe(base, n, m);
      if (probe.cells() > kIndexCellLimit) {
        complete = false;
        continue;
      }
      maximal[n * (caps.m_max + 1) + m] = ShapeSearch(ws, base, {n, m}, budget).run();
    }
  }
  return BoundedClone(base, caps, std::move(maximal), {}, complete);
}

std::vector<Pmf> pol_family(std::span<const Weight> ws, unsigned base, Shape shape, PmfFamily family,
                            std::uint64_t budget) {
  std::vector<Pmf> out;
  Pmf cur(base, shape.n, shape.m);
  if (family == PmfFamily::permutations && shape.n != shape.m) return out;
  if (!preserves_all(cur, ws, budget)) return out;
  if (family == PmfFamily::all) {
    Caps caps{shape.n, shape.m, 0};
    auto c = pol_bounded(ws, base, caps, budget);
    return c.members(shape, budget);
  }
  std::vector<bool> used(cur.outputs(), false);
  std::uint64_t steps = 0;
  auto dfs = [&](auto&& self, Code x) -> void {
    if (x == cur.inputs()) {
      out.push_back(cur);
      return;
    }
    if (++steps > budget) throw BudgetError("polymorphism search exceeds budget");
    for (Code y = 0; y < cur.outputs(); ++y) {
      if (family == PmfFamily::permutations && used[y]) continue;
      cur.insert(x, y);
      const std::size_t cell = static_cast<std::size_t>(x * cur.outputs() + y);
      bool ok = true;
      for (const auto& w : ws) {
        if (!preserves_with_cell(cur, cell, w, budget).preserved) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[y] = true;
        self(self, x + 1);
        used[y] = false;
      }
      cur.erase(x, y);
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pmfgalois
