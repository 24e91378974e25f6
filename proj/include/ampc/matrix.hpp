#ifndef AMPC_MATRIX_HPP_
#define AMPC_MATRIX_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "ampc/errors.hpp"

namespace ampc {

using Complex = std::complex<double>;

// Dense row-major real matrix. Entries are required to stay finite; the
// check is explicit (validate()) rather than enforced on every write so the
// hot loops stay branch-free.
class RealMatrix {
 public:
  RealMatrix() : rows_(0), cols_(0) {}
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw invalid_argument("RealMatrix: data size does not match dims");
  }

  static RealMatrix zeros(std::size_t rows, std::size_t cols) {
    return RealMatrix(rows, cols);
  }
  static RealMatrix identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& entries() { return data_; }
  const std::vector<double>& entries() const { return data_; }

  bool same_shape(const RealMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  void validate() const {
    for (double v : data_)
      if (!std::isfinite(v))
        throw invalid_argument("RealMatrix: non-finite entry");
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
  }

  RealMatrix transposed() const {
    RealMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  RealMatrix& operator+=(const RealMatrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  RealMatrix& operator-=(const RealMatrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  RealMatrix& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }

  friend RealMatrix operator+(RealMatrix a, const RealMatrix& b) {
    a += b;
    return a;
  }
  friend RealMatrix operator-(RealMatrix a, const RealMatrix& b) {
    a -= b;
    return a;
  }
  friend RealMatrix operator*(double s, RealMatrix a) {
    a *= s;
    return a;
  }

 private:
  void check_shape(const RealMatrix& o) const {
    if (!same_shape(o))
      throw invalid_argument("RealMatrix: shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<double> data_;
};

// Dense row-major complex matrix; holds share values and opened Beaver
// differences.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      throw invalid_argument("ComplexMatrix: data size does not match dims");
  }

  explicit ComplexMatrix(const RealMatrix& re)
      : rows_(re.rows()), cols_(re.cols()), data_(re.size()) {
    for (std::size_t i = 0; i < data_.size(); ++i)
      data_[i] = Complex(re.entries()[i], 0.0);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  Complex operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }
  std::vector<Complex>& entries() { return data_; }
  const std::vector<Complex>& entries() const { return data_; }

  bool same_shape(const ComplexMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  void validate() const {
    for (const Complex& v : data_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw invalid_argument("ComplexMatrix: non-finite entry");
  }

  RealMatrix real_part() const {
    RealMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      m.entries()[i] = data_[i].real();
    return m;
  }
  RealMatrix imag_part() const {
    RealMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      m.entries()[i] = data_[i].imag();
    return m;
  }
  double max_abs_imag() const {
    double m = 0.0;
    for (const Complex& v : data_) m = std::max(m, std::fabs(v.imag()));
    return m;
  }
  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }

  ComplexMatrix transposed() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (Complex& v : data_) v *= s;
    return *this;
  }
  ComplexMatrix& operator*=(double s) {
    for (Complex& v : data_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
    a *= s;
    return a;
  }

 private:
  void check_shape(const ComplexMatrix& o) const {
    if (!same_shape(o))
      throw invalid_argument("ComplexMatrix: shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Complex> data_;
};

inline double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  if (!a.same_shape(b)) throw invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::fabs(a.entries()[i] - b.entries()[i]));
  return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.same_shape(b)) throw invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

inline double relative_frobenius_error(const RealMatrix& got,
                                       const RealMatrix& want) {
  double denom = want.frobenius_norm();
  if (denom == 0.0) return (got - want).frobenius_norm();
  return (got - want).frobenius_norm() / denom;
}

}  // namespace ampc

#endif  // AMPC_MATRIX_HPP_
