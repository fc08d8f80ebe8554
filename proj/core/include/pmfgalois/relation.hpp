#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace pmfgalois {

// Square boolean matrix used for orders, preorders and congruences.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n, bool value = false) : n_(n), data_(n * n, value ? 1 : 0) {}
  static BoolMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { data_[i * n_ + j] = v ? 1 : 0; }

  bool subset_of(const BoolMatrix& other) const;
  BoolMatrix meet(const BoolMatrix& other) const;
  BoolMatrix transpose() const;
  std::size_t count() const;

  bool reflexive() const;
  bool symmetric() const;
  bool antisymmetric() const;
  bool transitive() const;

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  const std::vector<std::uint8_t>& data() const { return data_; }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;
  friend bool operator<(const BoolMatrix& a, const BoolMatrix& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.data_ < b.data_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> data_;
};

}  // namespace pmfgalois
