#ifndef BERNMEAN_POIBIN_HPP
#define BERNMEAN_POIBIN_HPP

#include <vector>

// Exact Poisson-binomial machinery plus the tight lower bound f on the CDF
// of the success count at fixed mean, and the extremal models attaining it.

namespace bernmean {

/// A sequence of per-trial success probabilities q_i, i = 1..n.
struct BernoulliModel {
  std::vector<double> q;

  BernoulliModel() = default;
  explicit BernoulliModel(std::vector<double> probs);

  int n() const { return static_cast<int>(q.size()); }
  double mean() const;

  /// Throws std::invalid_argument unless n >= 1 and every q_i is in [0,1].
  void validate() const;
};

/// Distribution of the success count: pmf[d] = P(sum T_i = d), d = 0..n.
struct PoissonBinomial {
  std::vector<double> pmf;

  int n() const { return static_cast<int>(pmf.size()) - 1; }
  /// P(sum T_i <= d); 0 for d < 0, 1 for d >= n.
  double cdf(int d) const;
};

/// Index pair (d, c) with c = n - d - 1 kept explicit: the CDF bound is
/// naturally indexed by d, its Q/S machinery by c.
struct HoeffdingIndex {
  int n;
  int d;
  int c;

  HoeffdingIndex(int n_, int d_);
  static HoeffdingIndex from_c(int n_, int c_);
};

/// Exact PMF by sequential convolution over trials, O(n^2).
PoissonBinomial exact_pmf(const BernoulliModel& model);

/// Same convolution carried in double-double arithmetic; last-bit faithful
/// even for n in the thousands. Used as a high-precision cross-check.
PoissonBinomial exact_pmf_compensated(const BernoulliModel& model);

/// Q~_n(c,p,s) = 1 - I_{(np-s)/(n-s)}(c-s+1, n-c).
/// Requires 0 <= s <= c <= n-1 and p in [s/n, 1].
double q_script(const HoeffdingIndex& idx, double p, int s);

struct MaxSearch {
  double value;
  int s;
};

/// Q_n(c,p): maximum of q_script over admissible integer s. The loop is
/// clamped to s <= floor(np) so the beta argument stays in [0,1]; within
/// the middle branch of f_bound every s in [0,c] is admissible.
double q_max(const HoeffdingIndex& idx, double p);
MaxSearch q_max_argmax(const HoeffdingIndex& idx, double p);

/// The tight CDF lower bound: P(sum T_i <= d) >= 1 - f_bound(qbar, d, n)
/// for every model with mean qbar. Defined for d in [-1, n], with
/// f(-1) = 1 and f(n) = 0. Branch ties resolve toward the larger value.
double f_bound(double qbar, const HoeffdingIndex& idx);

/// alpha_dagger(d,n) = I_{d/n}(d+1, n-d) for 0 <= d <= n-1; equals
/// 1 - I_{(c+1)/n}(c+1, n-c) in the c indexing.
double alpha_dagger(const HoeffdingIndex& idx);

/// Extremal model for the first branch (d <= n*qbar - 1): q_i = 1 for
/// i <= d+1, the rest at (n*qbar - d - 1)/(n - d - 1). Attains CDF(d) = 0.
BernoulliModel extremal_model_upper(int d, int n, double qbar);

/// Extremal model with s leading zeros and the rest at n*qbar/(n-s);
/// its CDF at any d equals 1 - q_script(c, 1-qbar, s) with c = n-d-1.
BernoulliModel extremal_model_s(int s, int n, double qbar);

}  // namespace bernmean

#endif  // BERNMEAN_POIBIN_HPP
