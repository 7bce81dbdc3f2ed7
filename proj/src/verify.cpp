#include "bernmean/verify.hpp"

#include <cmath>
#include <algorithm>
#include <future>
#include <thread>
#include <sstream>
#include <stdexcept>

#include "bernmean/golden.hpp"
#include "bernmean/inverse.hpp"
#include "bernmean/special.hpp"
#include "bernmean/textio.hpp"

namespace bernmean {

namespace {

// Slack for the closed event qbar >= qhat when both sides are computed in
// floating point; extremal models sit exactly on the boundary.
constexpr double kCoverTol = 1e-11;

constexpr std::uint64_t kMcPartition = 1 << 16;

std::string format_double(double v) { return fmt_shortest(v); }

}  // namespace

std::string coverage_csv_header() {
  return "method,side,alpha,n,qbar,exact_coverage,mc_coverage,mc_trials,seed,rng";
}

std::string to_csv_line(const CoverageReport& r) {
  std::ostringstream os;
  os << method_name(r.method) << ',' << side_name(r.side) << ','
     << format_double(r.alpha) << ',' << r.model.n() << ','
     << format_double(r.model.mean()) << ','
     << format_double(r.exact_coverage) << ',';
  if (r.mc_coverage) os << format_double(*r.mc_coverage);
  os << ',' << r.mc_trials << ',' << r.seed << ',' << r.rng_algorithm;
  return os.str();
}

std::string to_json_line(const CoverageReport& r) {
  std::ostringstream os;
  os << "{\"method\":\"" << method_name(r.method) << "\",\"side\":\""
     << side_name(r.side) << "\",\"alpha\":" << format_double(r.alpha)
     << ",\"n\":" << r.model.n()
     << ",\"qbar\":" << format_double(r.model.mean())
     << ",\"exact_coverage\":" << format_double(r.exact_coverage);
  if (r.mc_coverage) {
    os << ",\"mc_coverage\":" << format_double(*r.mc_coverage)
       << ",\"mc_trials\":" << r.mc_trials << ",\"seed\":" << r.seed
       << ",\"rng\":\"" << r.rng_algorithm << "\"";
  }
  os << '}';
  return os.str();
}

std::vector<double> estimator_curve(Method method, Side side, int n,
                                    double alpha) {
  std::vector<double> curve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    curve[static_cast<std::size_t>(k)] =
        estimate(method, side, CIQuery{n, k, alpha}).value;
  }
  return curve;
}

double coverage_against_curve(const PoissonBinomial& dist,
                              const std::vector<double>& curve, double qbar,
                              Side side) {
  double covered = 0.0;
  for (int k = 0; k <= dist.n(); ++k) {
    const double bound = curve[static_cast<std::size_t>(k)];
    const bool hit = side == Side::Lower ? bound <= qbar + kCoverTol
                                         : bound >= qbar - kCoverTol;
    if (hit) covered += dist.pmf[static_cast<std::size_t>(k)];
  }
  return covered > 1.0 ? 1.0 : covered;
}

CoverageReport exact_coverage(const BernoulliModel& model, Method method,
                              Side side, double alpha) {
  model.validate();
  CoverageReport report;
  report.model = model;
  report.method = method;
  report.side = side;
  report.alpha = alpha;
  const auto curve = estimator_curve(method, side, model.n(), alpha);
  report.exact_coverage =
      coverage_against_curve(exact_pmf(model), curve, model.mean(), side);
  return report;
}

CoverageReport mc_coverage(const BernoulliModel& model, Method method,
                           Side side, double alpha, std::uint64_t trials,
                           std::uint64_t seed) {
  model.validate();
  if (trials < 1) throw std::domain_error("mc_coverage: trials must be >= 1");
  const int n = model.n();
  const double qbar = model.mean();
  const auto curve = estimator_curve(method, side, n, alpha);

  const auto run_partition = [&](std::uint64_t part,
                                 std::uint64_t count) -> std::uint64_t {
    Rng rng(seed, part);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < count; ++t) {
      int k = 0;
      for (int i = 0; i < n; ++i) {
        k += rng.bernoulli(model.q[static_cast<std::size_t>(i)]) ? 1 : 0;
      }
      const double bound = curve[static_cast<std::size_t>(k)];
      const bool hit = side == Side::Lower ? bound <= qbar + kCoverTol
                                           : bound >= qbar - kCoverTol;
      if (hit) ++hits;
    }
    return hits;
  };

  // Partition boundaries are fixed (never derived from the worker count),
  // so the merged result is identical no matter how the batches are run.
  const std::uint64_t parts = (trials + kMcPartition - 1) / kMcPartition;
  const std::uint64_t workers =
      std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t hits = 0;
  if (parts > 1) {
    for (std::uint64_t batch = 0; batch < parts; batch += workers) {
      std::vector<std::future<std::uint64_t>> futures;
      for (std::uint64_t p = batch; p < std::min(batch + workers, parts); ++p) {
        const std::uint64_t count =
            p + 1 < parts ? kMcPartition : trials - p * kMcPartition;
        futures.push_back(
            std::async(std::launch::async, run_partition, p, count));
      }
      for (auto& f : futures) hits += f.get();
    }
  } else {
    hits = run_partition(0, trials);
  }

  CoverageReport report = exact_coverage(model, method, side, alpha);
  report.mc_coverage = double(hits) / double(trials);
  report.mc_trials = trials;
  report.seed = seed;
  return report;
}

BernoulliModel tightness_witness(int n, int k, double alpha, double epsilon) {
  if (n < 1) throw std::domain_error("tightness_witness: n must be >= 1");
  if (k < 1 || k > n) throw std::domain_error("tightness_witness: k outside [1, n]");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("tightness_witness: alpha outside (0,1)");
  }
  if (!(epsilon > 0.0)) throw std::domain_error("tightness_witness: epsilon <= 0");
  const double qhat = qhat_f(CIQuery{n, k, alpha}).value;
  const double qbar = qhat + epsilon;
  if (qbar > double(k) / n + 1e-15) {
    throw std::domain_error(
        "tightness_witness: qhat_f + epsilon beyond k/n (outside the "
        "strictly increasing regime)");
  }
  const int d = k - 1;
  const double t = n * qbar;
  if (d <= t - 1.0 + 1e-12 * (1.0 + t)) {
    return extremal_model_upper(d, n, qbar);
  }
  const auto best =
      q_max_argmax(HoeffdingIndex::from_c(n, n - d - 1), 1.0 - qbar);
  return extremal_model_s(best.s, n, qbar);
}

double binomial_peak_mass(int big_n, int y) {
  if (!(0 < y && y < big_n)) {
    throw std::domain_error("binomial_peak_mass: need 0 < y < N");
  }
  const double ln = std::log(double(big_n));
  const double value = std::exp(special::log_binomial(big_n, y) +
                                y * (std::log(double(y)) - ln) +
                                (big_n - y) * (std::log(double(big_n - y)) - ln));
  if (value > 0.5 + 1e-12) {
    throw std::logic_error("binomial_peak_mass: value exceeds 1/2");
  }
  return value;
}

FloorCheckReport alpha_dagger_floor_check(int n_max) {
  if (n_max < 2) throw std::domain_error("alpha_dagger_floor_check: n_max < 2");
  FloorCheckReport report;
  report.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    for (int d = 1; d <= n - 1; ++d) {
      const double v = alpha_dagger(HoeffdingIndex(n, d));
      ++report.cells;
      if (v < report.min_value) {
        report.min_value = v;
        report.min_n = n;
        report.min_d = d;
      }
      if (v < 0.25 - 1e-12) {
        report.pass = false;
        std::ostringstream os;
        os << "alpha_dagger(" << d << "," << n << ") = " << format_double(v)
           << " < 1/4";
        report.failures.push_back(os.str());
      }
    }
  }
  for (const auto& cell : golden::alpha_dagger_table()) {
    if (cell.n > n_max) continue;
    const double v = alpha_dagger(HoeffdingIndex(cell.n, cell.d));
    if (std::fabs(v - cell.value) > 5e-4 + 1e-9) {
      report.pass = false;
      std::ostringstream os;
      os << "alpha_dagger(" << cell.d << "," << cell.n << ") = "
         << format_double(v) << " does not round to " << cell.value;
      report.failures.push_back(os.str());
    }
  }
  return report;
}

Table2Report table2_check() {
  Table2Report report;
  for (int d = 3; d <= 13; ++d) {
    const int base = d <= 8 ? d : 16 - d;  // columns pair d with 16-d
    const auto& cells = golden::binom_product_table();
    const auto& ref = cells[static_cast<std::size_t>(base - 3)];
    const double expected =
        double(static_cast<long double>(ref.num) /
               static_cast<long double>(ref.den));
    const double computed = binomial_peak_mass(16, d);
    const bool ok = std::fabs(computed - expected) <= 5e-7 &&
                    std::fabs(computed - ref.approx) <= 5e-7 &&
                    computed < 0.25;
    report.cells.push_back({d, computed, expected, ok});
    if (!ok) report.pass = false;
  }
  return report;
}

SequentialPolicy make_constant_policy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("constant policy: p outside [0,1]");
  }
  std::ostringstream os;
  os << "constant:" << p;
  return {os.str(), [p](const std::vector<int>&) { return p; }};
}

SequentialPolicy make_adversarial_threshold_policy() {
  // Round i (1-based) wins surely while past successes lag i/2, else loses
  // surely. A worst-case-style history dependence for the coverage demo.
  return {"adversarial-threshold", [](const std::vector<int>& history) {
            int wins = 0;
            for (int t : history) wins += t;
            const double round = double(history.size()) + 1.0;
            return wins < round / 2.0 ? 1.0 : 0.0;
          }};
}

SequentialPolicy make_momentum_policy() {
  // Polya-urn style reinforcement: q_i = (wins + 1) / (i + 1).
  return {"momentum", [](const std::vector<int>& history) {
            int wins = 0;
            for (int t : history) wins += t;
            return (wins + 1.0) / (double(history.size()) + 2.0);
          }};
}

SequentialPolicy builtin_policy(const std::string& text) {
  if (text.rfind("constant:", 0) == 0) {
    return make_constant_policy(std::stod(text.substr(9)));
  }
  if (text == "adversarial-threshold") return make_adversarial_threshold_policy();
  if (text == "momentum") return make_momentum_policy();
  throw std::invalid_argument("unknown policy: " + text);
}

SequentialRun run_sequential(const SequentialPolicy& policy, int n,
                             double alpha, std::uint64_t seed,
                             std::uint64_t run_index) {
  if (n < 1) throw std::domain_error("run_sequential: n must be >= 1");
  Rng rng(seed, run_index);
  SequentialRun run;
  run.outcomes.reserve(static_cast<std::size_t>(n));
  double q_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double qi = policy.next_q(run.outcomes);
    if (!(qi >= 0.0 && qi <= 1.0)) {
      throw std::logic_error("run_sequential: policy returned q outside [0,1]");
    }
    q_sum += qi;
    const int t = rng.bernoulli(qi) ? 1 : 0;
    run.outcomes.push_back(t);
    run.successes += t;
  }
  run.realized_qbar = q_sum / n;
  run.qhat_f_value = qhat_f(CIQuery{n, run.successes, alpha}).value;
  run.covered = run.realized_qbar >= run.qhat_f_value - kCoverTol;
  return run;
}

}  // namespace bernmean
