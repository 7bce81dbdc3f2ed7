#ifndef BERNMEAN_VERIFY_HPP
#define BERNMEAN_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bernmean/intervals.hpp"
#include "bernmean/poibin.hpp"
#include "bernmean/rng.hpp"

// Verification oracles: exact and Monte Carlo coverage of the estimators,
// tightness witnesses, the dominance sweeps, and the sequential-sampling demo.

namespace bernmean {

struct CoverageReport {
  BernoulliModel model;
  Method method = Method::F;
  Side side = Side::Lower;
  double alpha = 0.0;
  double exact_coverage = 0.0;
  std::optional<double> mc_coverage;
  std::uint64_t mc_trials = 0;
  std::uint64_t seed = 0;
  const char* rng_algorithm = kRngAlgorithm;
};

/// CSV serialization of coverage reports (one record per line).
std::string coverage_csv_header();
std::string to_csv_line(const CoverageReport& report);
std::string to_json_line(const CoverageReport& report);

/// Estimator values at every k = 0..n for fixed (n, alpha). Coverage scans
/// reuse one curve across all models sharing these parameters.
std::vector<double> estimator_curve(Method method, Side side, int n,
                                    double alpha);

/// Coverage of a precomputed curve against a distribution with mean qbar:
/// total pmf mass where the bound holds (value <= qbar for lower bounds).
double coverage_against_curve(const PoissonBinomial& dist,
                              const std::vector<double>& curve, double qbar,
                              Side side);

/// Exact coverage probability via the Poisson-binomial PMF.
CoverageReport exact_coverage(const BernoulliModel& model, Method method,
                              Side side, double alpha);

/// Monte Carlo coverage estimate. Trials are split into fixed-size
/// partitions, each drawing from an independent (seed, partition) stream,
/// so results do not depend on execution order or worker count.
CoverageReport mc_coverage(const BernoulliModel& model, Method method,
                           Side side, double alpha, std::uint64_t trials,
                           std::uint64_t seed);

/// Extremal model with mean qhat_f(k,n,alpha) + epsilon, chosen from the
/// family attaining the CDF bound at d = k-1. Its CDF at k-1 is strictly
/// below 1 - alpha, certifying that the estimator cannot be raised at k.
/// Requires qhat_f + epsilon <= k/n.
BernoulliModel tightness_witness(int n, int k, double alpha, double epsilon);

/// C(N,y) (y/N)^y ((N-y)/N)^(N-y) for 0 < y < N. Throws std::logic_error
/// if the value ever exceeds 1/2 + 1e-12 (it cannot).
double binomial_peak_mass(int big_n, int y);

struct FloorCheckReport {
  bool pass = true;
  int n_max = 0;
  std::size_t cells = 0;
  double min_value = 1.0;
  int min_n = 0;
  int min_d = 0;
  std::vector<std::string> failures;
};

/// Sweeps alpha_dagger(d,n) for 2 <= n <= n_max: every value must be
/// >= 1/4, and the n <= 16 grid must reproduce the reference table to
/// three decimals.
FloorCheckReport alpha_dagger_floor_check(int n_max);

struct Table2Report {
  struct Cell {
    int d;
    double computed;
    double expected;
    bool ok;
  };
  bool pass = true;
  std::vector<Cell> cells;
};

/// Checks the n = 16 binomial-coefficient products for d = 3..13 against
/// the exact rationals (six decimals); all values are below 1/4.
Table2Report table2_check();

/// Next-round success probability as a deterministic function of the
/// outcome history; adaptivity lives entirely in the history-dependence.
struct SequentialPolicy {
  std::string name;
  std::function<double(const std::vector<int>& history)> next_q;
};

SequentialPolicy make_constant_policy(double p);
SequentialPolicy make_adversarial_threshold_policy();
SequentialPolicy make_momentum_policy();
/// Parses "constant:<p>", "adversarial-threshold" or "momentum";
/// throws std::invalid_argument otherwise.
SequentialPolicy builtin_policy(const std::string& text);

struct SequentialRun {
  std::vector<int> outcomes;
  double realized_qbar = 0.0;  // mean of the conditional q_i along the run
  int successes = 0;
  double qhat_f_value = 0.0;
  bool covered = false;
};

/// Samples one sequential experiment of n rounds under the policy and
/// reports whether the realized mean is covered by the F bound. Repeated
/// experiments under one seed use distinct run indices (RNG streams).
SequentialRun run_sequential(const SequentialPolicy& policy, int n,
                             double alpha, std::uint64_t seed,
                             std::uint64_t run_index = 0);

}  // namespace bernmean

#endif  // BERNMEAN_VERIFY_HPP
