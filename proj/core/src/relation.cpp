#include "pmfgalois/relation.hpp"

#include <algorithm>

#include "pmfgalois/error.hpp"

namespace pmfgalois {

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

bool BoolMatrix::subset_of(const BoolMatrix& other) const {
  if (n_ != other.n_) throw ShapeError("relation size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] && !other.data_[i]) return false;
  }
  return true;
}

BoolMatrix BoolMatrix::meet(const BoolMatrix& other) const {
  if (n_ != other.n_) throw ShapeError("relation size mismatch");
  BoolMatrix r(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] & other.data_[i];
  return r;
}

BoolMatrix BoolMatrix::transpose() const {
  BoolMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) r.set(j, i, (*this)(i, j));
  }
  return r;
}

std::size_t BoolMatrix::count() const {
  return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), std::uint8_t{1}));
}

bool BoolMatrix::reflexive() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!(*this)(i, i)) return false;
  }
  return true;
}

bool BoolMatrix::symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool BoolMatrix::antisymmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) && (*this)(j, i)) return false;
    }
  }
  return true;
}

bool BoolMatrix::transitive() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!(*this)(i, j)) continue;
      for (std::size_t k = 0; k < n_; ++k) {
        if ((*this)(j, k) && !(*this)(i, k)) return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> BoolMatrix::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace pmfgalois
