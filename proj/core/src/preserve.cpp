#include <limits>

#include "pmfgalois/error.hpp"
#include "pmfgalois/galois.hpp"

namespace pmfgalois {

namespace {

std::uint64_t saturating_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= b;
  }
  return r;
}

class MatrixScan {
 public:
  MatrixScan(const Pmf& f, const Weight& w, std::optional<std::size_t> required_cell)
      : f_(f), w_(w), m_(w.target()), n_(f.n()), mo_(f.m()), k_(w.k()), b_(f.base()) {
    if (f.base() != w.base()) throw ShapeError("pmf and weight over different base sets");
    cells_ = f.cell_list();
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (required_cell && cells_[i] == *required_cell) required_ = i;
    }
    if (required_cell && !required_) throw RangeError("required cell is not in the graph");
    in_digits_.resize(cells_.size() * n_);
    out_digits_.resize(cells_.size() * mo_);
    for (std::size_t p = 0; p < cells_.size(); ++p) {
      Code x = cells_[p] / f.outputs();
      Code y = cells_[p] % f.outputs();
      for (unsigned i = 0; i < n_; ++i) in_digits_[p * n_ + i] = digit_at(x, n_, i, b_);
      for (unsigned i = 0; i < mo_; ++i) out_digits_[p * mo_ + i] = digit_at(y, mo_, i, b_);
    }
    col_in_.assign(static_cast<std::size_t>(k_ + 1) * n_, 0);
    col_out_.assign(static_cast<std::size_t>(k_ + 1) * mo_, 0);
    choice_.assign(k_, 0);
  }

  std::uint64_t leaves() const {
    const std::uint64_t s = cells_.size();
    if (!required_) return saturating_pow(s, k_);
    return saturating_pow(s, k_) - saturating_pow(s - 1, k_);
  }

  PreservationResult run(std::uint64_t budget) {
    if (leaves() > budget) {
      throw BudgetError("preservation check needs " + std::to_string(leaves()) +
                        " matrices, budget is " + std::to_string(budget));
    }
    if (required_ && k_ == 0) return result_;
    dfs(0, false);
    return result_;
  }

 private:
  bool dfs(unsigned depth, bool used) {
    if (depth == k_) return leaf();
    const bool forced = required_ && !used && depth + 1 == k_;
    const std::size_t lo = forced ? *required_ : 0;
    const std::size_t hi = forced ? *required_ + 1 : cells_.size();
    Code* prev_in = &col_in_[depth * n_];
    Code* next_in = &col_in_[(depth + 1) * n_];
    Code* prev_out = &col_out_[depth * mo_];
    Code* next_out = &col_out_[(depth + 1) * mo_];
    for (std::size_t p = lo; p < hi; ++p) {
      choice_[depth] = p;
      for (unsigned i = 0; i < n_; ++i) next_in[i] = prev_in[i] * b_ + in_digits_[p * n_ + i];
      for (unsigned i = 0; i < mo_; ++i) next_out[i] = prev_out[i] * b_ + out_digits_[p * mo_ + i];
      if (!dfs(depth + 1, used || (required_ && p == *required_))) return false;
    }
    return true;
  }

  bool leaf() {
    ++result_.matrices;
    const Code* in = &col_in_[k_ * n_];
    const Code* out = &col_out_[k_ * mo_];
    Elem lhs = m_.unit();
    for (unsigned i = 0; i < n_; ++i) lhs = m_.mul(lhs, w_(in[i]));
    Elem rhs = m_.unit();
    for (unsigned i = 0; i < mo_; ++i) rhs = m_.mul(rhs, w_(out[i]));
    if (auto s = m_.saturation(); s && (lhs == *s || rhs == *s)) result_.saturated = true;
    if (m_.leq(lhs, rhs)) return true;
    PreservationWitness wit;
    wit.k = k_;
    for (unsigned j = 0; j < k_; ++j) {
      wit.rows_in.push_back(cells_[choice_[j]] / f_.outputs());
      wit.rows_out.push_back(cells_[choice_[j]] % f_.outputs());
    }
    wit.cols_in.assign(in, in + n_);
    wit.cols_out.assign(out, out + mo_);
    wit.lhs = lhs;
    wit.rhs = rhs;
    result_.preserved = false;
    result_.witness = std::move(wit);
    return false;
  }

  const Pmf& f_;
  const Weight& w_;
  const FinitePomonoid& m_;
  unsigned n_;
  unsigned mo_;
  unsigned k_;
  unsigned b_;
  std::vector<std::size_t> cells_;
  std::optional<std::size_t> required_;
  std::vector<Digit> in_digits_;
  std::vector<Digit> out_digits_;
  std::vector<Code> col_in_;
  std::vector<Code> col_out_;
  std::vector<std::size_t> choice_;
  PreservationResult result_;
};

}  // namespace

PreservationResult preserves(const Pmf& f, const Weight& w, std::uint64_t budget) {
  return MatrixScan(f, w, std::nullopt).run(budget);
}

PreservationResult preserves_with_cell(const Pmf& f, std::size_t cell, const Weight& w,
                                       std::uint64_t budget) {
  return MatrixScan(f, w, cell).run(budget);
}

bool preserves_all(const Pmf& f, std::span<const Weight> ws, std::uint64_t budget) {
  for (const auto& w : ws) {
    if (!preserves(f, w, budget).preserved) return false;
  }
  return true;
}

}  // namespace pmfgalois
