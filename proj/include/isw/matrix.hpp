#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace isw {

using Cx = std::complex<double>;
using CVector = std::vector<Cx>;

// Dense complex square matrix, row major. Dimensions here top out at 65, so
// plain O(d^3) products are more than fast enough.
class CMatrix {
 public:
  explicit CMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("CMatrix: dimension must be >= 1");
  }

  static CMatrix identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  Cx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Cx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  CMatrix operator+(const CMatrix& o) const {
    CMatrix r(dim_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  CMatrix operator-(const CMatrix& o) const {
    CMatrix r(dim_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  CMatrix operator*(const CMatrix& o) const {
    CMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) {
        Cx aik = a_[i * dim_ + k];
        if (aik == Cx{}) continue;
        for (std::size_t j = 0; j < dim_; ++j) r.a_[i * dim_ + j] += aik * o.a_[k * dim_ + j];
      }
    return r;
  }

  CMatrix operator*(const Cx& s) const {
    CMatrix r(dim_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
  }

  CMatrix transpose() const {
    CMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  CMatrix conj() const {
    CMatrix r(dim_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = std::conj(a_[i]);
    return r;
  }

  CMatrix adjoint() const { return conj().transpose(); }

  CVector apply(const CVector& v) const {
    CVector r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      Cx s{};
      for (std::size_t j = 0; j < dim_; ++j) s += a_[i * dim_ + j] * v[j];
      r[i] = s;
    }
    return r;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Cx& x : a_) s += std::norm(x);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const Cx& x : a_) m = std::max(m, std::abs(x));
    return m;
  }

  // Frobenius norm of the off-diagonal part.
  double off_diagonal_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (i != j) s += std::norm((*this)(i, j));
    return std::sqrt(s);
  }

 private:
  std::size_t dim_;
  std::vector<Cx> a_;
};

inline CMatrix operator*(const Cx& s, const CMatrix& m) { return m * s; }

}  // namespace isw
