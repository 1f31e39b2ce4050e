#include "abspec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "abspec/error.hpp"

namespace abspec {

SymmetricTridiagonal::SymmetricTridiagonal(std::vector<double> diag,
                                           std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty()) {
    throw InvalidArgument("tridiagonal matrix needs dim >= 1");
  }
  if (offdiag_.size() + 1 != diag_.size()) {
    throw InvalidArgument("off-diagonal length must be dim - 1");
  }
  for (double v : diag_) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite diagonal entry");
  }
  for (double v : offdiag_) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite off-diagonal entry");
  }
}

double SymmetricTridiagonal::norm1() const {
  const std::size_t n = dim();
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = std::abs(diag_[j]);
    if (j > 0) col += std::abs(offdiag_[j - 1]);
    if (j + 1 < n) col += std::abs(offdiag_[j]);
    best = std::max(best, col);
  }
  return best;
}

SymmetricTridiagonal phase_reduce(const HermitianTridiagonal& h) {
  return SymmetricTridiagonal(h.diag(), h.offmag());
}

EigenResult eigenvalues(const SymmetricTridiagonal& t, double tol,
                        std::size_t iteration_cap) {
  if (!(tol > 0.0 && tol <= 1e-6)) {
    throw InvalidArgument("eigen tolerance must lie in (0, 1e-6]");
  }
  const std::size_t n = t.dim();
  std::vector<double> d = t.diag();
  EigenResult result;
  if (n == 1) {
    result.eigenvalues = std::move(d);
    return result;
  }

  // e[i] couples d[i] and d[i+1]; e[n-1] is a zero sentinel.
  std::vector<double> e = t.offdiag();
  e.push_back(0.0);

  const double anorm = t.norm1();
  const double floor = std::numeric_limits<double>::epsilon() * anorm;
  double neglected = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    std::size_t iter = 0;
    std::size_t m = l;
    for (;;) {
      for (m = l; m + 1 < n; ++m) {
        const double em = std::abs(e[m]);
        if (em <= tol * (std::abs(d[m]) + std::abs(d[m + 1])) || em <= floor) {
          neglected += em;
          e[m] = 0.0;
          break;
        }
      }
      if (m == l) break;
      if (iter++ == iteration_cap) {
        throw ConvergenceError("QL iteration did not converge for eigenvalue " +
                               std::to_string(l) + " within " +
                               std::to_string(iteration_cap) + " sweeps");
      }
      ++result.iterations;

      // Shift from the leading 2x2 block of the active window.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::sort(d.begin(), d.end());
  result.eigenvalues = std::move(d);
  result.residual_bound =
      neglected + static_cast<double>(n) *
                      std::numeric_limits<double>::epsilon() * anorm;
  return result;
}

namespace {

// Number of eigenvalues strictly below x: the count of negative ratios
// q_k = p_k/p_{k-1} of consecutive leading principal minors
// p_k(x) = det(T_k − xI). From p_k = (d_{k-1} − x)·p_{k-1} − e_{k-2}²·p_{k-2},
//   q_1 = d_0 − x,  q_k = (d_{k-1} − x) − e_{k-2}²/q_{k-1}.
// A zero ratio is nudged to a tiny negative pivot so the count stays defined.
std::size_t count_below(const std::vector<double>& diag,
                        const std::vector<double>& off, double x) {
  constexpr double kPivotFloor = std::numeric_limits<double>::min();
  const std::size_t n = diag.size();
  std::size_t negatives = 0;
  double q = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double e2 = k == 0 ? 0.0 : off[k - 1] * off[k - 1];
    q = (diag[k] - x) - (k == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -kPivotFloor;
    if (q < 0.0) ++negatives;
  }
  return negatives;
}

}  // namespace

EigenResult oracle_charpoly_eigenvalues(const SymmetricTridiagonal& t) {
  constexpr std::size_t kMaxDim = 8;
  constexpr double kRelTol = 1e-13;
  const std::size_t n = t.dim();
  if (n > kMaxDim) {
    throw InvalidArgument("characteristic-polynomial oracle supports dim <= 8");
  }
  const auto& diag = t.diag();
  const auto& off = t.offdiag();

  double lo = diag[0];
  double hi = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < n) radius += std::abs(off[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));
  // Widen so neither end sits exactly on an eigenvalue.
  lo -= 1e-3 * (scale + 1.0);
  hi += 1e-3 * (scale + 1.0);

  EigenResult result;
  result.eigenvalues.resize(n);
  double widest = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    // k-th eigenvalue (0-based) is the smallest x with count_below(x) > k.
    double a = lo;
    double b = hi;
    for (int step = 0; step < 200; ++step) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (count_below(diag, off, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
      ++result.iterations;
      if (b - a <= kRelTol * std::max(std::abs(a), std::abs(b))) break;
    }
    result.eigenvalues[k] = 0.5 * (a + b);
    widest = std::max(widest, 0.5 * (b - a));
  }
  result.residual_bound = widest;
  return result;
}

std::vector<double> displaced_spectrum_oracle(std::size_t n_levels,
                                              const CouplingParams& cp,
                                              const MoleculeSpec& mol) {
  if (n_levels == 0) {
    throw InvalidArgument("n_levels must be at least 1");
  }
  const double hw = mol.hbar_omega0().value();
  const double shift = cp.ratio_r * cp.ratio_r;
  std::vector<double> out(n_levels);
  for (std::size_t n = 0; n < n_levels; ++n) {
    out[n] = hw * (static_cast<double>(n) + 0.5 - shift);
  }
  return out;
}

}  // namespace abspec
