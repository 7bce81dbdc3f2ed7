#include "bernmean/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bernmean/special.hpp"

namespace bernmean {

namespace {

constexpr double kTieTol = 1e-12;

[[noreturn]] void domain_fail(const std::string& what) {
  throw std::domain_error("inverse: " + what);
}

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace

void InverseQuery::validate() const {
  if (n < 1) domain_fail("InverseQuery: n must be >= 1");
  if (d < -1 || d > n) domain_fail("InverseQuery: d outside [-1, n]");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    domain_fail("InverseQuery: alpha outside [0,1]");
  }
}

double s_script(const HoeffdingIndex& idx, double alpha, int s) {
  const int n = idx.n;
  const int c = idx.c;
  if (c < 0 || c > n - 1) domain_fail("s_script: c outside [0, n-1]");
  if (s < 0 || s > c) domain_fail("s_script: s outside [0, c]");
  if (!(alpha >= 0.0 && alpha <= 1.0)) domain_fail("s_script: alpha outside [0,1]");
  const double x =
      special::inv_reg_inc_beta(1.0 - alpha, double(c - s + 1), double(n - c));
  return (s + (n - s) * x) / n;
}

MaxSearch s_max_argmax(const HoeffdingIndex& idx, double alpha) {
  const int n = idx.n;
  const int c = idx.c;
  if (c < 0 || c > n - 1) domain_fail("s_max: c outside [0, n-1]");
  if (!(alpha <= 1.0 + kTieTol)) domain_fail("s_max: alpha > 1");
  const double dag = alpha_dagger(HoeffdingIndex::from_c(n, c));
  if (alpha < dag - kTieTol) {
    domain_fail("s_max: alpha below alpha_dagger (outside inverse domain)");
  }
  alpha = clamp01(alpha);
  MaxSearch best{-1.0, 0};
  for (int s = 0; s <= c; ++s) {
    const double v = s_script(idx, alpha, s);
    if (v > best.value) best = {v, s};
  }
  return best;
}

double s_max(const HoeffdingIndex& idx, double alpha) {
  return s_max_argmax(idx, alpha).value;
}

namespace {

// 1 - S_n(c,alpha) as min over s of (n-s)(1-x)/n. Algebraically identical
// to 1 - s_max but avoids the cancellation in 1 - (s + (n-s)x)/n when the
// maximizing s is large (e.g. the k = 1 estimator value alpha/n).
double one_minus_s_max(const HoeffdingIndex& idx, double alpha) {
  const int n = idx.n;
  const int c = idx.c;
  alpha = clamp01(alpha);
  double best = 1.0;
  for (int s = 0; s <= c; ++s) {
    const double x =
        special::inv_reg_inc_beta(1.0 - alpha, double(c - s + 1), double(n - c));
    best = std::min(best, (n - s) * (1.0 - x) / n);
  }
  return best;
}

}  // namespace

double f_tilde(const InverseQuery& q) {
  q.validate();
  const int n = q.n;
  const int d = q.d;
  const double alpha = q.alpha;
  if (d == -1) return 0.0;
  if (d == n) {
    // f(qbar, n, n) is identically zero, so no inverse exists; the point
    // mass convention I_x(n+1, 0) gives 1 for any alpha > 0.
    return alpha > 0.0 ? 1.0 : 0.0;
  }
  const HoeffdingIndex idx(n, d);
  const double dag = alpha_dagger(idx);
  const auto beta_branch = [&] {
    return special::inv_reg_inc_beta(alpha, double(d + 1), double(n - d));
  };
  const auto s_branch = [&] {
    return one_minus_s_max(HoeffdingIndex::from_c(n, n - d - 1), alpha);
  };
  if (std::fabs(alpha - dag) <= kTieTol) {
    return std::min(beta_branch(), s_branch());  // fail toward the safe side
  }
  return alpha > dag ? s_branch() : beta_branch();
}

double r_linear(const HoeffdingIndex& idx, double p) {
  const int n = idx.n;
  const int c = idx.c;
  if (c < 0 || c > n - 1) domain_fail("r_linear: c outside [0, n-1]");
  const double np = n * p;
  if (np < c - 1e-9 || np > c + 1.0 + 1e-9) {
    domain_fail("r_linear: p outside [c/n, (c+1)/n]");
  }
  const double dag = alpha_dagger(HoeffdingIndex::from_c(n, c));
  return 1.0 - (1.0 - dag) * (np - c);
}

double u_linear(const HoeffdingIndex& idx, double alpha) {
  const int n = idx.n;
  const int c = idx.c;
  if (c < 0 || c > n - 1) domain_fail("u_linear: c outside [0, n-1]");
  if (!(alpha <= 1.0 + kTieTol)) domain_fail("u_linear: alpha > 1");
  const double dag = alpha_dagger(HoeffdingIndex::from_c(n, c));
  if (alpha < dag - kTieTol) domain_fail("u_linear: alpha below alpha_dagger");
  return (c + (1.0 - alpha) / (1.0 - dag)) / n;
}

double g_tilde_inv(const InverseQuery& q) {
  q.validate();
  const int n = q.n;
  const int d = q.d;
  const double alpha = q.alpha;
  if (d == -1) return 0.0;
  if (d == n) return alpha > 0.0 ? 1.0 : 0.0;  // same convention as f_tilde
  const HoeffdingIndex idx(n, d);
  const double dag = alpha_dagger(idx);
  const auto beta_branch = [&] {
    return special::inv_reg_inc_beta(alpha, double(d + 1), double(n - d));
  };
  const auto linear_branch = [&] {
    return clamp01((d + 1.0 - (1.0 - alpha) / (1.0 - dag)) / n);
  };
  if (std::fabs(alpha - dag) <= kTieTol) {
    return std::min(beta_branch(), linear_branch());
  }
  return alpha > dag ? linear_branch() : beta_branch();
}

}  // namespace bernmean
