#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "tl_rep_detail.hpp"
#include "tlent/error.hpp"
#include "tlent/tl_rep.hpp"

namespace tlent {

namespace {

// Unknowns: moduli a_λ on the support, followed by d when it is free.
class ConstraintProblem {
 public:
  ConstraintProblem(std::size_t n, std::span<const std::size_t> perm, std::optional<double> fixed_d)
      : n_(n), perm_(perm.begin(), perm.end()), fixed_d_(fixed_d) {}

  std::size_t unknowns() const { return n_ + (fixed_d_ ? 0 : 1); }
  std::size_t residuals() const { return 2 * n_ * n_ + 1; }

  double loop(std::span<const double> x) const { return fixed_d_ ? *fixed_d_ : x[n_]; }

  CMatrix alpha(std::span<const double> x) const {
    CMatrix a(n_, n_);
    for (std::size_t r = 0; r < n_; ++r) a(r, perm_[r]) = x[r];
    return a;
  }

  std::vector<double> residual(std::span<const double> x) const {
    const auto sums = detail::quartic_sums(alpha(x));
    const double d2 = loop(x) * loop(x);
    std::vector<double> r;
    r.reserve(residuals());
    for (std::size_t mu = 0; mu < n_; ++mu)
      for (std::size_t beta = 0; beta < n_; ++beta) {
        const double delta = mu == beta ? 1.0 : 0.0;
        r.push_back(d2 * sums.first(mu, beta).real() - delta);
        r.push_back(d2 * sums.second(mu, beta).real() - delta);
      }
    double norm2 = 0.0;
    for (std::size_t k = 0; k < n_; ++k) norm2 += x[k] * x[k];
    r.push_back(norm2 - 1.0);
    return r;
  }

  // Least-squares d² for the current moduli; the residual is linear in d².
  double best_loop(std::span<const double> x) const {
    const auto sums = detail::quartic_sums(alpha(x));
    double num = 0.0;
    double den = 0.0;
    for (std::size_t mu = 0; mu < n_; ++mu)
      for (std::size_t beta = 0; beta < n_; ++beta) {
        const double delta = mu == beta ? 1.0 : 0.0;
        for (const double s : {sums.first(mu, beta).real(), sums.second(mu, beta).real()}) {
          num += s * delta;
          den += s * s;
        }
      }
    return den > 0.0 ? std::sqrt(std::max(num / den, 0.0)) : 1.0;
  }

  // Moduli stay positive and unit-norm; d stays positive.
  void project(std::vector<double>& x) const {
    double norm2 = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      x[k] = std::abs(x[k]);
      norm2 += x[k] * x[k];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t k = 0; k < n_; ++k) x[k] *= inv;
    if (!fixed_d_) x[n_] = std::abs(x[n_]);
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> perm_;
  std::optional<double> fixed_d_;
};

double sum_squares(const std::vector<double>& r) {
  return std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
}

// Solves the small dense system m·x = b by Gaussian elimination with partial pivoting.
std::vector<double> solve_dense(std::vector<std::vector<double>> m, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    std::swap(m[col], m[pivot]);
    std::swap(b[col], b[pivot]);
    if (m[col][col] == 0.0) throw Error(ErrorCode::NumericError, "singular normal equations");
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m[i][c] * x[c];
    x[i] = s / m[i][i];
  }
  return x;
}

std::vector<double> gauss_newton(const ConstraintProblem& problem, std::vector<double> x, int max_iterations) {
  const std::size_t p = problem.unknowns();
  const std::size_t m = problem.residuals();
  constexpr double kStep = 1e-7;

  problem.project(x);
  std::vector<double> r = problem.residual(x);
  double cost = sum_squares(r);

  for (int it = 0; it < max_iterations && cost > 1e-30; ++it) {
    // Central-difference Jacobian, m × p.
    std::vector<std::vector<double>> jac(m, std::vector<double>(p));
    for (std::size_t k = 0; k < p; ++k) {
      auto xp = x;
      auto xm = x;
      xp[k] += kStep;
      xm[k] -= kStep;
      const auto rp = problem.residual(xp);
      const auto rm = problem.residual(xm);
      for (std::size_t i = 0; i < m; ++i) jac[i][k] = (rp[i] - rm[i]) / (2.0 * kStep);
    }

    std::vector<std::vector<double>> normal(p, std::vector<double>(p, 0.0));
    std::vector<double> rhs(p, 0.0);
    double trace = 0.0;
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b)
        for (std::size_t i = 0; i < m; ++i) normal[a][b] += jac[i][a] * jac[i][b];
      for (std::size_t i = 0; i < m; ++i) rhs[a] -= jac[i][a] * r[i];
      trace += normal[a][a];
    }
    // The free-d problem has a one-parameter solution family, so JᵀJ is
    // rank deficient near it; a tiny ridge keeps the step well defined.
    for (std::size_t a = 0; a < p; ++a) normal[a][a] += 1e-12 * (1.0 + trace);

    std::vector<double> delta;
    try {
      delta = solve_dense(normal, rhs);
    } catch (const Error&) {
      break;
    }

    double damping = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 40; ++halving, damping *= 0.5) {
      auto trial = x;
      for (std::size_t k = 0; k < p; ++k) trial[k] += damping * delta[k];
      problem.project(trial);
      auto rt = problem.residual(trial);
      const double trial_cost = sum_squares(rt);
      if (trial_cost < cost) {
        x = std::move(trial);
        r = std::move(rt);
        cost = trial_cost;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return x;
}

bool same_solution(const ConstraintSolution& a, const ConstraintSolution& b, double tol) {
  if (std::abs(a.d - b.d) > tol) return false;
  const auto ma = a.alpha.moduli();
  const auto mb = b.alpha.moduli();
  for (std::size_t k = 0; k < ma.size(); ++k)
    if (std::abs(ma[k] - mb[k]) > tol) return false;
  return true;
}

}  // namespace

std::vector<ConstraintSolution> solve_constraints(std::size_t n, std::span<const std::size_t> perm,
                                                  std::optional<double> d, const SolverOptions& options) {
  if (n == 0 || perm.size() != n) throw Error(ErrorCode::InvalidPermutation, "permutation length must equal n");
  std::vector<bool> seen(n, false);
  for (const auto p : perm) {
    if (p >= n || seen[p]) throw Error(ErrorCode::InvalidPermutation, "not a permutation of {0..n-1}");
    seen[p] = true;
  }
  if (d && !(*d > 0.0)) throw Error(ErrorCode::NonPositiveLoop, "d = " + std::to_string(*d));

  const ConstraintProblem problem(n, perm, d);
  std::mt19937 rng(options.seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  std::vector<ConstraintSolution> found;
  for (int start = 0; start < options.starts; ++start) {
    // Uniform point on the simplex for the squared moduli.
    std::vector<double> x(problem.unknowns());
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = -std::log(1.0 - uniform(rng));
      total += x[k];
    }
    for (std::size_t k = 0; k < n; ++k) x[k] = std::sqrt(x[k] / total);
    if (!d) x[n] = problem.best_loop(x);

    x = gauss_newton(problem, std::move(x), options.max_iterations);

    if (std::any_of(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n), [](double a) { return a < 1e-12; }))
      continue;
    try {
      AmplitudeMatrix alpha(problem.alpha(x));
      const double loop = problem.loop(x);
      const double residual = verify_constraints(alpha, loop).max();
      if (residual > options.accept_residual) continue;
      ConstraintSolution candidate{std::move(alpha), loop, residual};
      const bool duplicate = std::any_of(found.begin(), found.end(), [&](const ConstraintSolution& s) {
        return same_solution(s, candidate, options.dedup_tol);
      });
      if (!duplicate) found.push_back(std::move(candidate));
    } catch (const Error&) {
      continue;
    }
  }

  std::sort(found.begin(), found.end(), [](const ConstraintSolution& a, const ConstraintSolution& b) {
    const auto ma = a.alpha.moduli();
    const auto mb = b.alpha.moduli();
    if (ma != mb) return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
    return a.d < b.d;
  });
  return found;
}

}  // namespace tlent
