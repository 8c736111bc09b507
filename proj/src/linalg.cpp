#include "qudits/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qudits {

Complex omega(int d, long long power) {
  if (d < 1) throw std::invalid_argument("omega: d must be positive");
  long long k = power % d;
  if (k < 0) k += d;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / d);
}

CVector CVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("CVector::basis: index out of range");
  CVector v(dim);
  v[index] = 1.0;
  return v;
}

double CVector::norm() const {
  double sum = 0.0;
  for (const auto& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

bool CVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) < tol; }

Complex CVector::inner(const CVector& rhs) const {
  if (dim() != rhs.dim()) throw std::invalid_argument("CVector::inner: dimension mismatch");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) sum += std::conj(entries_[i]) * rhs[i];
  return sum;
}

CVector CVector::scaled(Complex factor) const {
  CVector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = factor * entries_[i];
  return out;
}

double CVector::max_abs_diff(const CVector& rhs) const {
  if (dim() != rhs.dim()) throw std::invalid_argument("CVector::max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) worst = std::max(worst, std::abs(entries_[i] - rhs[i]));
  return worst;
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<Complex>& diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::diagonal_real(const std::vector<double>& diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::scaled(Complex factor) const {
  CMatrix out = *this;
  for (auto& z : out.entries_) z *= factor;
  return out;
}

CMatrix CMatrix::pow(unsigned exponent) const {
  if (rows_ != cols_) throw std::invalid_argument("CMatrix::pow: square matrices only");
  CMatrix result = identity(rows_);
  CMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Complex CMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("CMatrix::trace: square matrices only");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

CVector CMatrix::column(std::size_t c) const {
  CVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void CMatrix::set_column(std::size_t c, const CVector& v) {
  if (v.dim() != rows_) throw std::invalid_argument("CMatrix::set_column: dimension mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

double CMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& z : entries_) worst = std::max(worst, std::abs(z));
  return worst;
}

double CMatrix::max_abs_diff(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("CMatrix::max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    worst = std::max(worst, std::abs(entries_[i] - rhs.entries_[i]));
  return worst;
}

bool CMatrix::is_unitary(double tol) const { return unitary_residual(*this) < tol; }

bool CMatrix::is_hermitian(double tol) const { return hermitian_residual(*this) < tol; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("CMatrix product: shape mismatch");
  CMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

CVector operator*(const CMatrix& a, const CVector& v) {
  if (a.cols_ != v.dim()) throw std::invalid_argument("CMatrix*CVector: shape mismatch");
  CVector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    Complex sum = 0.0;
    for (std::size_t c = 0; c < a.cols_; ++c) sum += a(r, c) * v[c];
    out[r] = sum;
  }
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("CMatrix sum: shape mismatch");
  CMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("CMatrix difference: shape mismatch");
  CMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

double unitary_residual(const CMatrix& m) {
  return (m.adjoint() * m).max_abs_diff(CMatrix::identity(m.cols()));
}

double hermitian_residual(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_residual: square matrices only");
  double worst = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
  return worst;
}

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex f = a(ar, ac);
      if (f == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
    }
  return out;
}

EigResult eig_hermitian(const CMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("eig_hermitian: square matrices only");
  if (hermitian_residual(h) >= kHermitianTol)
    throw std::invalid_argument("eig_hermitian: input is not Hermitian");

  const auto n = static_cast<Eigen::Index>(h.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = h(r, c);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_hermitian: eigensolver failed to converge");

  EigResult result;
  result.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  result.eigenvectors = CMatrix(h.rows(), h.cols());
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) result.eigenvectors(r, c) = solver.eigenvectors()(r, c);
  return result;
}

CMatrix exp_i_hermitian(const CMatrix& h, double alpha) {
  const EigResult eig = eig_hermitian(h);
  const std::size_t n = h.rows();
  // V diag(e^{i a lambda}) V'
  CMatrix scaled = eig.eigenvectors;
  for (std::size_t c = 0; c < n; ++c) {
    const Complex phase = std::polar(1.0, alpha * eig.eigenvalues[c]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= phase;
  }
  return scaled * eig.eigenvectors.adjoint();
}

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: shape mismatch");
  Complex sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) sum += std::conj(a(r, c)) * b(r, c);
  return sum;
}

}  // namespace qudits
