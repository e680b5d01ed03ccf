#include "tlent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tlent/error.hpp"

namespace tlent {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

double off_diagonal_norm(const CMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p,q). The 2x2 block is first made
// real by a phase on column q, then diagonalized by a real rotation.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double beta = std::abs(apq);
  if (beta == 0.0) return;
  const cplx phase = apq / beta;  // e^{iφ}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * beta);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // G restricted to (p,q): [[c, s], [−s e^{−iφ}, c e^{−iφ}]]
  const cplx gpp = c;
  const cplx gpq = s;
  const cplx gqp = -s * std::conj(phase);
  const cplx gqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {  // A ← A G
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // A ← G† A
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {  // V ← V G
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NumericError: return "NumericError";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NonPositiveLoop: return "NonPositiveLoop";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::SingularNormalization: return "SingularNormalization";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::TemperatureNonPositive: return "TemperatureNonPositive";
    case ErrorCode::LoopOutOfDomain: return "LoopOutOfDomain";
  }
  return "Unknown";
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match rows*cols");
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::outer(std::span<const cplx> v, std::span<const cplx> w) {
  CMatrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

CMatrix CMatrix::conj() const {
  CMatrix m = *this;
  for (auto& z : m.data_) z = std::conj(z);
  return m;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool CMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  CMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

CVector operator*(const CMatrix& a, std::span<const cplx> v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  CVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

double distance(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "distance");
  return (a - b).frobenius_norm();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return m;
}

double hermiticity_defect(const CMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "hermiticity of a non-square matrix");
  return distance(a, a.adjoint());
}

HermEig hermitian_eig(const CMatrix& input, const JacobiOptions& options) {
  if (!input.is_square()) throw Error(ErrorCode::DimensionMismatch, "hermitian_eig needs a square matrix");
  if (!input.all_finite()) throw Error(ErrorCode::NumericError, "hermitian_eig input has non-finite entries");
  const double scale = input.frobenius_norm();
  const double defect = hermiticity_defect(input);
  if (defect > options.hermitian_tol * std::max(1.0, scale)) {
    throw Error(ErrorCode::NotHermitian, "‖A − A†‖_F = " + std::to_string(defect));
  }

  const std::size_t n = input.rows();
  CMatrix a = (input + input.adjoint()) * cplx{0.5};
  CMatrix v = CMatrix::identity(n);

  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= options.off_diagonal_tol * scale) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence, "Jacobi sweep cap of " + std::to_string(options.max_sweeps) + " reached");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermEig out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

CMatrix reconstruct(const HermEig& eig, std::span<const cplx> mapped_values) {
  const std::size_t n = eig.values.size();
  if (mapped_values.size() != n) throw Error(ErrorCode::DimensionMismatch, "reconstruct");
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += eig.vectors(i, k) * mapped_values[k] * std::conj(eig.vectors(j, k));
      m(i, j) = sum;
    }
  return m;
}

CMatrix mat_exp_hermitian(const CMatrix& a, double scale) { return mat_exp_hermitian(a, cplx{scale}); }

CMatrix mat_exp_hermitian(const CMatrix& a, cplx scale) {
  const HermEig eig = hermitian_eig(a);
  CVector mapped(eig.values.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) mapped[k] = std::exp(scale * eig.values[k]);
  return reconstruct(eig, mapped);
}

CMatrix sqrt_psd(const CMatrix& a, double clamp) {
  const HermEig eig = hermitian_eig(a);
  CVector mapped(eig.values.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) {
    double lam = eig.values[k];
    if (lam < 0.0) {
      if (lam < -clamp) throw Error(ErrorCode::NumericError, "sqrt_psd: eigenvalue " + std::to_string(lam));
      lam = 0.0;
    }
    mapped[k] = std::sqrt(lam);
  }
  return reconstruct(eig, mapped);
}

CMatrix partial_trace(const CMatrix& rho, std::size_t n_a, std::size_t n_b, Keep keep) {
  if (!rho.is_square() || rho.rows() != n_a * n_b) {
    throw Error(ErrorCode::DimensionMismatch, "partial_trace: operator size " + std::to_string(rho.rows()) +
                                                  " != " + std::to_string(n_a) + "*" + std::to_string(n_b));
  }
  if (keep == Keep::A) {
    CMatrix out(n_a, n_a);
    for (std::size_t i = 0; i < n_a; ++i)
      for (std::size_t j = 0; j < n_a; ++j)
        for (std::size_t k = 0; k < n_b; ++k) out(i, j) += rho(i * n_b + k, j * n_b + k);
    return out;
  }
  CMatrix out(n_b, n_b);
  for (std::size_t i = 0; i < n_b; ++i)
    for (std::size_t j = 0; j < n_b; ++j)
      for (std::size_t k = 0; k < n_a; ++k) out(i, j) += rho(k * n_b + i, k * n_b + j);
  return out;
}

cplx inner(std::span<const cplx> v, std::span<const cplx> w) {
  if (v.size() != w.size()) throw Error(ErrorCode::DimensionMismatch, "inner product");
  cplx sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += std::conj(v[i]) * w[i];
  return sum;
}

double norm(std::span<const cplx> v) { return std::sqrt(inner(v, v).real()); }

}  // namespace tlent
