#ifndef BERNMEAN_INTERVALS_HPP
#define BERNMEAN_INTERVALS_HPP

#include <string>

// One-sided confidence bounds on the mean success probability of n
// independent, non-identical Bernoulli trials, given the success count.

namespace bernmean {

enum class Method { F, G, Hoeffding, BinomLike, ClopperPearson };
enum class Side { Lower, Upper };

/// Observed statistic plus confidence parameter: n rounds, k successes,
/// alpha = 1 - confidence level.
struct CIQuery {
  int n;
  int k;
  double alpha;

  void validate() const;
};

struct IntervalResult {
  Method method;
  Side side;
  double value;
  CIQuery query;
  /// Set when the estimator is used outside its validity domain (binomial-
  /// like with alpha > 1/2) or is the i.i.d.-only reference (Clopper-Pearson,
  /// which is NOT a valid bound for non-identical trials).
  bool advisory = false;
  const char* note = "";
};

/// Buehler-optimal lower bound: f_tilde(k-1, n, alpha).
IntervalResult qhat_f(const CIQuery& q);

/// Mirrored upper bound 1 - qhat_f(n-k) at the same confidence.
IntervalResult qhat_f_upper(const CIQuery& q);

/// Branch point alpha* = I_{(k-1)/n}(k, n-k+1) for k in [1, n];
/// equals alpha_dagger at d = k-1, and is 0 at k = 1.
double alpha_star(int n, int k);

/// Simplified lower bound; equals qhat_f when k <= 1 or alpha <= alpha*,
/// in particular whenever alpha <= 1/4, and never exceeds it.
IntervalResult qhat_g(const CIQuery& q);

/// Mirrored upper bound 1 - qhat_g(n-k).
IntervalResult qhat_g_upper(const CIQuery& q);

/// Concentration-inequality bound k/n - sqrt(-log(alpha)/(2n)), clamped to
/// [0,1]. Errors at alpha = 0 where the raw bound is -infinity.
IntervalResult qhat_hoeffding(const CIQuery& q);

/// Tightest binomial-like bound: 0 for k <= 1, else I^{-1}_alpha(k-1, n-k+2).
/// Valid only for alpha <= 1/2; flagged advisory beyond that.
IntervalResult qhat_binomlike(const CIQuery& q);

/// Clopper-Pearson lower bound I^{-1}_alpha(k, n-k+1): the i.i.d. optimum,
/// provided as a reference only -- it is invalid for non-identical trials
/// and always carries the advisory flag.
IntervalResult qhat_clopper_pearson(const CIQuery& q);

/// Uniform dispatch. Upper sides mirror as 1 - lower(n-k); for F and G this
/// is the definition, for the others the natural reflection.
IntervalResult estimate(Method method, Side side, const CIQuery& q);

const char* method_name(Method m);
const char* side_name(Side s);
/// Parses "f", "g", "hoeffding", "binomlike", "clopper-pearson" (or "cp").
/// Throws std::invalid_argument on anything else.
Method parse_method(const std::string& name);

}  // namespace bernmean

#endif  // BERNMEAN_INTERVALS_HPP
