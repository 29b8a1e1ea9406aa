#include "curvebody/cmatrix.hpp"

#include <cmath>
#include <stdexcept>

extern "C" {
void zheev_(const char* jobz, const char* uplo, const int* n,
            std::complex<double>* a, const int* lda, double* w,
            std::complex<double>* work, const int* lwork, double* rwork,
            int* info);
}

namespace curvebody {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix shape mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix shape mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cdouble s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CMatrix CMatrix::dagger() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

std::vector<cdouble> CMatrix::column(std::size_t j) const {
  std::vector<cdouble> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cdouble s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix shape mismatch in *");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cdouble aik = a(i, k);
      if (aik == cdouble(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cdouble aij = a(i, j);
      if (aij == cdouble(0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  return a * b - b * a;
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  return a * b + b * a;
}

std::vector<cdouble> matvec(const CMatrix& a, const std::vector<cdouble>& x) {
  if (a.cols() != x.size())
    throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<cdouble> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cdouble s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

cdouble dot(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
  cdouble s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double max_abs(const std::vector<cdouble>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

double norm2(const std::vector<cdouble>& v) {
  return std::sqrt(std::abs(dot(v, v)));
}

HermitianEigen eig_hermitian(const CMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("eig_hermitian needs a square matrix");
  const int n = static_cast<int>(a.rows());
  HermitianEigen out;
  out.values.resize(n);
  out.vectors = CMatrix(a.rows(), a.cols());
  if (n == 0) return out;

  // LAPACK is column-major; feed it the conjugate transpose of our row-major
  // storage, which for the intended Hermitian input is the same matrix.
  std::vector<cdouble> buf(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      buf[static_cast<std::size_t>(j) * n + i] =
          std::conj(a(static_cast<std::size_t>(j), static_cast<std::size_t>(i)));

  int info = 0, lwork = -1;
  std::vector<double> rwork(std::max(1, 3 * n - 2));
  cdouble wkopt;
  zheev_("V", "U", &n, buf.data(), &n, out.values.data(), &wkopt, &lwork,
         rwork.data(), &info);
  lwork = static_cast<int>(wkopt.real());
  std::vector<cdouble> work(std::max(lwork, 1));
  zheev_("V", "U", &n, buf.data(), &n, out.values.data(), work.data(), &lwork,
         rwork.data(), &info);
  if (info != 0)
    throw std::runtime_error("zheev failed, info=" + std::to_string(info));

  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      out.vectors(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
          buf[static_cast<std::size_t>(k) * n + i];
  return out;
}

}  // namespace curvebody
