#include "grovesim/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "grovesim/errors.hpp"

namespace grovesim {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw ParameterError("matrix dimension mismatch");
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex lhs = (*this)(r, k);
      if (lhs == Complex{}) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += lhs * rhs(k, c);
    }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) throw ParameterError("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

bool ComplexMatrix::is_unitary(double tol) const {
  return (adjoint() * *this).max_abs_diff(identity(dim_)) <= tol;
}

}  // namespace grovesim
