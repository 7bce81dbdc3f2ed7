#ifndef BERNMEAN_INVERSE_HPP
#define BERNMEAN_INVERSE_HPP

#include "bernmean/poibin.hpp"

// Inverse machinery for the CDF bound: S (inverse of Q), the full inverse
// f_tilde, the linear over-bounds R/U, and the simplified inverse g_tilde.

namespace bernmean {

/// Arguments of the inverse maps: f_tilde / g_tilde_inv at (d, n, alpha).
struct InverseQuery {
  int n;
  int d;       // in [-1, n]
  double alpha;  // in [0, 1]

  void validate() const;
};

/// S~_n(c,alpha,s) = (s + (n-s) I^{-1}_{1-alpha}(c-s+1, n-c)) / n.
/// Inverse of q_script in p for fixed s: both round-trip identities hold.
double s_script(const HoeffdingIndex& idx, double alpha, int s);

/// S_n(c,alpha) = max over s in [0,c] of s_script; inverse of q_max on
/// p in [c/n, (c+1)/n] <-> alpha in [alpha_dagger, 1]. Throws when alpha
/// lies below alpha_dagger (outside the inverse domain).
double s_max(const HoeffdingIndex& idx, double alpha);
MaxSearch s_max_argmax(const HoeffdingIndex& idx, double alpha);

/// The inverse of f_bound in qbar on [0, (d+1)/n]:
///   0 at d = -1; 1 - S_n(n-d-1, alpha) when alpha > alpha_dagger;
///   I^{-1}_alpha(d+1, n-d) when alpha <= alpha_dagger.
/// Within 1e-12 of the branch point both branches are evaluated and the
/// smaller value returned (a smaller lower bound never breaks coverage).
double f_tilde(const InverseQuery& q);

/// Linear over-bound R_n(c,p) = 1 - (1-alpha_dagger)(np-c) on
/// p in [c/n, (c+1)/n]; dominates q_max, tight at c = n-1.
double r_linear(const HoeffdingIndex& idx, double p);

/// Linear over-bound U_n(c,alpha) = (c + (1-alpha)/(1-alpha_dagger)) / n on
/// alpha in [alpha_dagger, 1]; dominates s_max, tight at c = n-1.
double u_linear(const HoeffdingIndex& idx, double alpha);

/// Simplified inverse: the S branch of f_tilde replaced by the linear bound,
///   (d+1 - (1-alpha)/(1-alpha_dagger)) / n  when alpha > alpha_dagger.
/// Never exceeds f_tilde; equal to it when d <= 0 or alpha <= alpha_dagger.
double g_tilde_inv(const InverseQuery& q);

}  // namespace bernmean

#endif  // BERNMEAN_INVERSE_HPP
