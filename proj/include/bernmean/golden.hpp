#ifndef BERNMEAN_GOLDEN_HPP
#define BERNMEAN_GOLDEN_HPP

#include <cstdint>
#include <vector>

// Reference values the verification suites and the tables subcommand check
// against: the alpha_dagger grid for n <= 16 (3-decimal precision) and the
// exact rationals of the binomial-coefficient products at n = 16.

namespace bernmean::golden {

struct AlphaDaggerCell {
  int n;
  int d;
  double value;  // rounded to 3 decimals
};

/// All 120 cells for 2 <= n <= 16, 1 <= d <= n-1. Every value is >= 1/4.
const std::vector<AlphaDaggerCell>& alpha_dagger_table();

struct BinomProductCell {
  int d;                  // 3..8; the value at 16-d is identical
  std::uint64_t num;
  std::uint64_t den;
  double approx;          // 6-decimal rounding of num/den
};

/// C(16,d) (d/16)^d ((16-d)/16)^(16-d) for d = 3..8. Every value is < 1/4.
const std::vector<BinomProductCell>& binom_product_table();

}  // namespace bernmean::golden

#endif  // BERNMEAN_GOLDEN_HPP
