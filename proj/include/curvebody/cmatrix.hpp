#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace curvebody {

using cdouble = std::complex<double>;

// Dense complex matrix, row-major.  Sizes in this project stay tiny
// (products of spin multiplicities), so everything is plain O(n^3).
class CMatrix {
public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cdouble& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const cdouble& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(cdouble s);

  CMatrix dagger() const;
  double max_abs() const;

  std::vector<cdouble> column(std::size_t j) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cdouble> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cdouble s, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

std::vector<cdouble> matvec(const CMatrix& a, const std::vector<cdouble>& x);
cdouble dot(const std::vector<cdouble>& a, const std::vector<cdouble>& b);
double max_abs(const std::vector<cdouble>& v);
double norm2(const std::vector<cdouble>& v);

// Eigendecomposition of a Hermitian matrix (LAPACK zheev).  Eigenvalues come
// back ascending; eigenvector k is the k-th column of `vectors`.
struct HermitianEigen {
  std::vector<double> values;
  CMatrix vectors;
};

HermitianEigen eig_hermitian(const CMatrix& a);

}  // namespace curvebody
