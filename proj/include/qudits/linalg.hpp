#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qudits {

using Complex = std::complex<double>;

// Absolute max-norm tolerances; all amplitudes in this library are O(1).
inline constexpr double kNormTol      = 1e-12;
inline constexpr double kUnitaryTol   = 1e-10;
inline constexpr double kHermitianTol = 1e-12;

// omega(d, k) = exp(2*pi*i*k/d), the primitive d-th root of unity to the k-th power.
// k is reduced mod d before evaluation so large exponents lose no precision.
Complex omega(int d, long long power = 1);

class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim) : entries_(dim) {}
  CVector(std::initializer_list<Complex> entries) : entries_(entries) {}

  static CVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Complex>& entries() const { return entries_; }

  double norm() const;
  bool is_normalized(double tol = kNormTol) const;

  // <this|rhs>, conjugate-linear in *this.
  Complex inner(const CVector& rhs) const;

  CVector scaled(Complex factor) const;
  double max_abs_diff(const CVector& rhs) const;

 private:
  std::vector<Complex> entries_;
};

// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(const std::vector<Complex>& diag);
  static CMatrix diagonal_real(const std::vector<double>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const Complex* data() const { return entries_.data(); }

  CMatrix adjoint() const;
  CMatrix scaled(Complex factor) const;
  CMatrix pow(unsigned exponent) const;  // square matrices, exponent >= 0
  Complex trace() const;

  CVector column(std::size_t c) const;
  void set_column(std::size_t c, const CVector& v);

  double max_abs() const;
  double max_abs_diff(const CMatrix& rhs) const;
  bool is_unitary(double tol = kUnitaryTol) const;
  bool is_hermitian(double tol = kHermitianTol) const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CVector operator*(const CMatrix& a, const CVector& v);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// ||M'M - I||_max with M' the adjoint; 0 for exactly unitary input.
double unitary_residual(const CMatrix& m);
// ||M - M'||_max.
double hermitian_residual(const CMatrix& m);

// Kronecker product, index convention (i1,i2) -> i1*rows_b + i2.
CMatrix tensor_product(const CMatrix& a, const CMatrix& b);

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // columns, unitary
};

// Dense Hermitian eigendecomposition. Throws std::invalid_argument if the
// input is not Hermitian within kHermitianTol (a caller bug, not a runtime
// condition). No eigenvector uniqueness inside degenerate subspaces.
EigResult eig_hermitian(const CMatrix& h);

// exp(i*alpha*H) for Hermitian H, via the spectral decomposition.
CMatrix exp_i_hermitian(const CMatrix& h, double alpha);

// Hilbert-Schmidt inner product Tr(A'B).
Complex hs_inner(const CMatrix& a, const CMatrix& b);

}  // namespace qudits
