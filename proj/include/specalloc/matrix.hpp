#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace specalloc {

// Dense row-major square matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t row, std::size_t col) const noexcept { return data_[row * n_ + col]; }
  double& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * n_ + col]; }

  double at(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_) throw std::out_of_range("SquareMatrix index out of range");
    return data_[row * n_ + col];
  }

  std::span<const double> row(std::size_t r) const noexcept { return {data_.data() + r * n_, n_}; }
  std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * n_, n_}; }

  const std::vector<double>& data() const noexcept { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace specalloc
