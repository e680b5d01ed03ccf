#pragma once

// Small dense complex linear algebra used by every other module.
//
// Storage is row-major. For a two-site product basis with n states per site
// the ket |λμ⟩ lives at index λ·n + μ, which is also the row order produced
// by kron(a, b).

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tlent {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// Default relative tolerance for identity checks throughout the library.
inline constexpr double kTolerance = 1e-10;

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const cplx> diag);
  static CMatrix diagonal(std::span<const double> diag);
  // |v⟩⟨w|
  static CMatrix outer(std::span<const cplx> v, std::span<const cplx> w);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const cplx> entries() const noexcept { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  // Entrywise complex conjugate in the stored basis.
  CMatrix conj() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CVector operator*(const CMatrix& a, std::span<const cplx> v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

// ‖a − b‖_F; throws DimensionMismatch on shape mismatch.
double distance(const CMatrix& a, const CMatrix& b);

/// Kronecker product: (a ⊗ b)(i·rows_b + k, j·cols_b + l) = a(i,j)·b(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

// ‖A − A†‖_F
double hermiticity_defect(const CMatrix& a);

struct HermEig {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are the eigenvectors
};

struct JacobiOptions {
  int max_sweeps = 100;
  double off_diagonal_tol = 1e-14;  // relative to ‖A‖_F
  double hermitian_tol = kTolerance;
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Throws NotHermitian when ‖A − A†‖_F exceeds hermitian_tol·max(1, ‖A‖_F)
/// and NoConvergence when the sweep cap is reached first.
HermEig hermitian_eig(const CMatrix& a, const JacobiOptions& options = {});

// V diag(f(λ)) V† from a precomputed decomposition.
CMatrix reconstruct(const HermEig& eig, std::span<const cplx> mapped_values);

/// exp(scale·A) for Hermitian A through its eigendecomposition.
CMatrix mat_exp_hermitian(const CMatrix& a, double scale);
CMatrix mat_exp_hermitian(const CMatrix& a, cplx scale);

// Principal square root of a Hermitian positive semidefinite matrix.
// Eigenvalues in [−clamp, 0) are treated as zero.
CMatrix sqrt_psd(const CMatrix& a, double clamp = 1e-12);

enum class Keep { A, B };

/// Reduced matrix of a bipartite operator on C^{n_a} ⊗ C^{n_b}.
CMatrix partial_trace(const CMatrix& rho, std::size_t n_a, std::size_t n_b, Keep keep);

cplx inner(std::span<const cplx> v, std::span<const cplx> w);  // ⟨v|w⟩
double norm(std::span<const cplx> v);

}  // namespace tlent
