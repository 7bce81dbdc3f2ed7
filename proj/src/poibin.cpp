#include "bernmean/poibin.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "bernmean/special.hpp"

namespace bernmean {

namespace {

constexpr double kBranchTol = 1e-12;

[[noreturn]] void domain_fail(const std::string& what) {
  throw std::domain_error("poibin: " + what);
}

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// Error-free transforms for the compensated convolution.
struct TwoFold {
  double hi;
  double lo;
};

TwoFold two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

TwoFold two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace

BernoulliModel::BernoulliModel(std::vector<double> probs) : q(std::move(probs)) {
  validate();
}

void BernoulliModel::validate() const {
  if (q.empty()) throw std::invalid_argument("BernoulliModel: n must be >= 1");
  for (double qi : q) {
    if (!(qi >= 0.0 && qi <= 1.0)) {
      throw std::invalid_argument("BernoulliModel: q_i outside [0,1]");
    }
  }
}

double BernoulliModel::mean() const {
  double sum = 0.0;
  double comp = 0.0;
  for (double qi : q) {
    const double t = sum + qi;
    comp += std::fabs(sum) >= std::fabs(qi) ? (sum - t) + qi : (qi - t) + sum;
    sum = t;
  }
  return (sum + comp) / static_cast<double>(q.size());
}

double PoissonBinomial::cdf(int d) const {
  if (d < 0) return 0.0;
  if (d >= n()) return 1.0;
  double sum = 0.0;
  double comp = 0.0;
  for (int k = 0; k <= d; ++k) {
    const double t = sum + pmf[k];
    comp += std::fabs(sum) >= std::fabs(pmf[k]) ? (sum - t) + pmf[k]
                                                : (pmf[k] - t) + sum;
    sum = t;
  }
  return clamp01(sum + comp);
}

HoeffdingIndex::HoeffdingIndex(int n_, int d_) : n(n_), d(d_), c(n_ - d_ - 1) {
  if (n < 1) domain_fail("HoeffdingIndex: n must be >= 1");
  if (d < -1 || d > n) domain_fail("HoeffdingIndex: d outside [-1, n]");
}

HoeffdingIndex HoeffdingIndex::from_c(int n_, int c_) {
  return HoeffdingIndex(n_, n_ - c_ - 1);
}

PoissonBinomial exact_pmf(const BernoulliModel& model) {
  model.validate();
  const int n = model.n();
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  p[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const double qi = model.q[static_cast<std::size_t>(i)];
    for (int k = i + 1; k >= 1; --k) {
      p[k] = p[k] * (1.0 - qi) + p[k - 1] * qi;
    }
    p[0] *= 1.0 - qi;
  }
  return PoissonBinomial{std::move(p)};
}

PoissonBinomial exact_pmf_compensated(const BernoulliModel& model) {
  model.validate();
  const int n = model.n();
  std::vector<TwoFold> p(static_cast<std::size_t>(n) + 1, TwoFold{0.0, 0.0});
  p[0] = {1.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const double qi = model.q[static_cast<std::size_t>(i)];
    const double ri = 1.0 - qi;
    for (int k = i + 1; k >= 1; --k) {
      // p[k] = p[k]*(1-qi) + p[k-1]*qi, each product and the sum kept as
      // hi/lo pairs so rounding does not accumulate over the n passes.
      const TwoFold a = two_prod(p[k].hi, ri);
      const TwoFold b = two_prod(p[k - 1].hi, qi);
      TwoFold s = two_sum(a.hi, b.hi);
      s.lo += a.lo + b.lo + p[k].lo * ri + p[k - 1].lo * qi;
      p[k] = s;
    }
    const TwoFold a = two_prod(p[0].hi, ri);
    p[0] = {a.hi, a.lo + p[0].lo * ri};
  }
  std::vector<double> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = clamp01(p[k].hi + p[k].lo);
  return PoissonBinomial{std::move(out)};
}

double q_script(const HoeffdingIndex& idx, double p, int s) {
  const int n = idx.n;
  const int c = idx.c;
  if (c < 0 || c > n - 1) domain_fail("q_script: c outside [0, n-1]");
  if (s < 0 || s > c) domain_fail("q_script: s outside [0, c]");
  if (!(p <= 1.0 + kBranchTol)) domain_fail("q_script: p > 1");
  const double np = n * p;
  if (np < s - 1e-9) domain_fail("q_script: p < s/n");
  const double x = clamp01((np - s) / (n - s));
  return 1.0 - special::reg_inc_beta(x, double(c - s + 1), double(n - c));
}

MaxSearch q_max_argmax(const HoeffdingIndex& idx, double p) {
  const int n = idx.n;
  const int c = idx.c;
  if (c < 0 || c > n - 1) domain_fail("q_max: c outside [0, n-1]");
  if (!(p >= -kBranchTol && p <= 1.0 + kBranchTol)) {
    domain_fail("q_max: p outside [0,1]");
  }
  p = clamp01(p);
  // s admissible only while s/n <= p; s = 0 always qualifies.
  const int s_hi = std::min(c, static_cast<int>(std::floor(n * p + 1e-9)));
  MaxSearch best{-1.0, 0};
  for (int s = 0; s <= s_hi; ++s) {
    const double v = q_script(idx, p, s);
    if (v > best.value) best = {v, s};
  }
  return best;
}

double q_max(const HoeffdingIndex& idx, double p) {
  return q_max_argmax(idx, p).value;
}

double f_bound(double qbar, const HoeffdingIndex& idx) {
  if (!(qbar >= 0.0 && qbar <= 1.0)) domain_fail("f_bound: qbar outside [0,1]");
  const int n = idx.n;
  const int d = idx.d;
  if (d == -1) return 1.0;  // by construction
  if (d == n) return 0.0;   // degenerate b = 0 case, never evaluates a beta
  const double t = n * qbar;
  const double tol = kBranchTol * (1.0 + t);
  // Ties resolve toward the branch with the larger value, which can only
  // weaken the claimed CDF bound, never break it.
  if (d <= t - 1.0 + tol) return 1.0;
  if (d < t + tol) return q_max(HoeffdingIndex::from_c(n, n - d - 1), 1.0 - qbar);
  return special::reg_inc_beta(qbar, double(d + 1), double(n - d));
}

double alpha_dagger(const HoeffdingIndex& idx) {
  const int n = idx.n;
  const int d = idx.d;
  if (d < 0 || d > n - 1) domain_fail("alpha_dagger: d outside [0, n-1]");
  return special::reg_inc_beta(double(d) / n, double(d + 1), double(n - d));
}

BernoulliModel extremal_model_upper(int d, int n, double qbar) {
  if (n < 1) domain_fail("extremal_model_upper: n must be >= 1");
  if (d < 0 || d > n - 1) domain_fail("extremal_model_upper: d outside [0, n-1]");
  if (!(qbar >= 0.0 && qbar <= 1.0)) {
    domain_fail("extremal_model_upper: qbar outside [0,1]");
  }
  const double t = n * qbar;
  if (d > t - 1.0 + 1e-9) {
    domain_fail("extremal_model_upper: requires d <= n*qbar - 1");
  }
  std::vector<double> q(static_cast<std::size_t>(n), 1.0);
  if (d + 1 < n) {
    const double fill = clamp01((t - d - 1.0) / (n - d - 1.0));
    for (int i = d + 1; i < n; ++i) q[static_cast<std::size_t>(i)] = fill;
  }
  return BernoulliModel{std::move(q)};
}

BernoulliModel extremal_model_s(int s, int n, double qbar) {
  if (n < 1) domain_fail("extremal_model_s: n must be >= 1");
  if (s < 0 || s > n - 1) domain_fail("extremal_model_s: s outside [0, n-1]");
  if (!(qbar >= 0.0 && qbar <= 1.0)) {
    domain_fail("extremal_model_s: qbar outside [0,1]");
  }
  const double t = n * qbar;
  if (t > n - s + 1e-9) domain_fail("extremal_model_s: requires n*qbar <= n-s");
  std::vector<double> q(static_cast<std::size_t>(n), 0.0);
  const double fill = clamp01(t / (n - s));
  for (int i = s; i < n; ++i) q[static_cast<std::size_t>(i)] = fill;
  return BernoulliModel{std::move(q)};
}

}  // namespace bernmean
