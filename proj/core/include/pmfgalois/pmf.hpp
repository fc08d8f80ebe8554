#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pmfgalois/tuple_code.hpp"

namespace pmfgalois {

struct Shape {
  unsigned n = 0;
  unsigned m = 0;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

// A relation B^n x B^m stored as a dense bitset. Cell index of (x, y) is x*|B|^m + y.
class Pmf {
 public:
  Pmf() : Pmf(2, 0, 0) {}
  Pmf(unsigned base, unsigned n, unsigned m);

  static Pmf from_pairs(unsigned base, unsigned n, unsigned m,
                        std::span<const std::pair<Code, Code>> pairs);
  // Only for pmfs with at most 64 cells.
  static Pmf from_mask(unsigned base, unsigned n, unsigned m, std::uint64_t mask);
  // Total function given by a code map.
  static Pmf from_function(unsigned base, unsigned n, unsigned m,
                           const std::function<Code(Code)>& fn);

  unsigned base() const { return base_; }
  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  Shape shape() const { return {n_, m_}; }
  Code inputs() const { return inputs_; }
  Code outputs() const { return outputs_; }
  std::size_t cells() const { return static_cast<std::size_t>(inputs_ * outputs_); }

  bool contains(Code x, Code y) const { return test_cell(static_cast<std::size_t>(x * outputs_ + y)); }
  bool test_cell(std::size_t c) const { return (words_[c >> 6] >> (c & 63)) & 1U; }
  void insert(Code x, Code y);
  void erase(Code x, Code y);
  void set_cell(std::size_t c) { words_[c >> 6] |= std::uint64_t{1} << (c & 63); }
  void reset_cell(std::size_t c) { words_[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

  std::size_t size() const;
  bool empty() const;
  std::vector<std::pair<Code, Code>> pairs() const;
  std::vector<std::size_t> cell_list() const;
  std::vector<Code> image(Code x) const;
  bool subset_of(const Pmf& g) const;
  std::uint64_t mask() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  template <class F>
  void for_each_cell(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        unsigned b = static_cast<unsigned>(std::countr_zero(bits));
        fn(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;

  friend bool operator==(const Pmf& a, const Pmf& b);
  // Shape first, then the sorted cell lists lexicographically.
  friend bool operator<(const Pmf& a, const Pmf& b);

 private:
  unsigned base_;
  unsigned n_;
  unsigned m_;
  Code inputs_;
  Code outputs_;
  std::vector<std::uint64_t> words_;
};

struct PmfHash {
  std::size_t operator()(const Pmf& f) const { return f.hash(); }
};

Pmf identity(unsigned base, unsigned n);
Pmf compose(const Pmf& g, const Pmf& f);
Pmf product(const Pmf& f, const Pmf& g);
Pmf inverse(const Pmf& f);
Pmf pmf_union(const Pmf& f, const Pmf& g);

bool is_total(const Pmf& f);
bool is_univalued(const Pmf& f);
bool is_injective(const Pmf& f);
bool is_surjective(const Pmf& f);
bool is_permutation(const Pmf& f);
bool is_subfunction_of(const Pmf& f, const Pmf& g);

struct PmfPredicates {
  bool total;
  bool univalued;
  bool injective;
  bool surjective;
  bool permutation;
};
PmfPredicates predicates(const Pmf& f);

Pmf swap_gate(unsigned base);
// Output coordinate i is input coordinate rho[i].
Pmf variable_permutation(unsigned base, std::span<const unsigned> rho);
Pmf diagonal(unsigned base, unsigned m);
Pmf projection(unsigned base, unsigned n, unsigned i);
Pmf constant(unsigned base, Digit c);
Pmf empty_pmf(unsigned base, unsigned n, unsigned m);

}  // namespace pmfgalois
