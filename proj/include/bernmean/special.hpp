#ifndef BERNMEAN_SPECIAL_HPP
#define BERNMEAN_SPECIAL_HPP

// Regularized incomplete beta function I_x(a,b), its inverse in x, and the
// beta <-> binomial tail identities. Everything here is pure and thread-safe.

namespace bernmean::special {

/// log Gamma(x) for x > 0 (re-entrant, does not touch signgam).
double log_gamma(double x);

/// log B(a,b) = lgamma(a) + lgamma(b) - lgamma(a+b).
double log_beta(double a, double b);

/// log C(n,k) via log-gamma; valid for 0 <= k <= n.
double log_binomial(long n, long k);

/// Argument pack of I_x(a,b): x in [0,1], a > 0, b >= 0 (b = 0 only as the
/// documented limit case).
struct BetaArgs {
  double x;
  double a;
  double b;
};

/// Regularized incomplete beta function I_x(a,b).
///
/// Domain: x in [0,1], a > 0, b >= 0. The case b == 0 is admitted as the
/// limit convention I_x(a,0) = 0 for x < 1 and 1 at x = 1 (point mass at 1).
/// Absolute error <= 1e-13 for a+b <= 1e4. Throws std::domain_error on
/// invalid arguments.
double reg_inc_beta(double x, double a, double b);
inline double reg_inc_beta(const BetaArgs& args) {
  return reg_inc_beta(args.x, args.a, args.b);
}

/// Inverse of I_x(a,b) in x: the unique root of I_x(a,b) = alpha.
///
/// Domain: alpha in [0,1], a > 0, b >= 1 (monotone regime). Safeguarded
/// Newton iteration bracketed by bisection; absolute error <= 1e-12 in x.
/// Throws std::domain_error on invalid arguments and std::runtime_error if
/// the iteration cap (200) is hit.
double inv_reg_inc_beta(double alpha, double a, double b);

/// Upper binomial tail sum_{k=d}^{n} C(n,k) x^k (1-x)^(n-k).
///
/// Computed by direct log-space summation, NOT through reg_inc_beta, so the
/// identity binom_tail(n,d,x) == I_x(d, n-d+1) (d >= 1) is a genuine
/// cross-check between two independent routes.
double binom_tail(int n, int d, double x);

}  // namespace bernmean::special

#endif  // BERNMEAN_SPECIAL_HPP
