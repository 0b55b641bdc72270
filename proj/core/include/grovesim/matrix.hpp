#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace grovesim {

using Complex = std::complex<double>;

/// Square, row-major complex matrix. Used for verification-scale unitaries.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;

  /// Largest entrywise modulus of (this - other). Dimensions must agree.
  double max_abs_diff(const ComplexMatrix& other) const;

  /// M^dagger M == I entrywise within tol.
  bool is_unitary(double tol) const;

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

}  // namespace grovesim
