#include "bernmean/golden.hpp"

namespace bernmean::golden {

namespace {

std::vector<AlphaDaggerCell> make_alpha_dagger_table() {
  // Rows n = 2..16, columns d = 1..n-1.
  static const double rows[][15] = {
      /* n= 2 */ {0.250},
      /* n= 3 */ {0.259, 0.296},
      /* n= 4 */ {0.262, 0.313, 0.316},
      /* n= 5 */ {0.263, 0.317, 0.337, 0.328},
      /* n= 6 */ {0.263, 0.320, 0.344, 0.351, 0.335},
      /* n= 7 */ {0.264, 0.321, 0.347, 0.359, 0.360, 0.340},
      /* n= 8 */ {0.264, 0.321, 0.349, 0.363, 0.370, 0.367, 0.344},
      /* n= 9 */ {0.264, 0.322, 0.350, 0.366, 0.374, 0.377, 0.372, 0.346},
      /* n=10 */ {0.264, 0.322, 0.350, 0.367, 0.377, 0.382, 0.383, 0.376,
                  0.349},
      /* n=11 */ {0.264, 0.322, 0.351, 0.368, 0.379, 0.385, 0.388, 0.387,
                  0.379, 0.350},
      /* n=12 */ {0.264, 0.323, 0.351, 0.368, 0.380, 0.387, 0.392, 0.393,
                  0.391, 0.381, 0.352},
      /* n=13 */ {0.264, 0.323, 0.351, 0.369, 0.381, 0.389, 0.394, 0.397,
                  0.397, 0.394, 0.383, 0.353},
      /* n=14 */ {0.264, 0.323, 0.352, 0.369, 0.381, 0.389, 0.395, 0.399,
                  0.401, 0.400, 0.396, 0.385, 0.354},
      /* n=15 */ {0.264, 0.323, 0.352, 0.370, 0.382, 0.390, 0.396, 0.401,
                  0.403, 0.404, 0.403, 0.398, 0.387, 0.355},
      /* n=16 */ {0.264, 0.323, 0.352, 0.370, 0.382, 0.391, 0.397, 0.402,
                  0.405, 0.407, 0.407, 0.405, 0.400, 0.388, 0.356},
  };
  std::vector<AlphaDaggerCell> cells;
  cells.reserve(120);
  for (int n = 2; n <= 16; ++n) {
    for (int d = 1; d <= n - 1; ++d) {
      cells.push_back({n, d, rows[n - 2][d - 1]});
    }
  }
  return cells;
}

std::vector<BinomProductCell> make_binom_product_table() {
  return {
      {3, 286216975729679085ULL, 1152921504606846976ULL, 0.248254},
      {4, 241805655ULL, 1073741824ULL, 0.225199},
      {5, 243406518990009375ULL, 1152921504606846976ULL, 0.211122},
      {6, 7126259765625ULL, 35184372088832ULL, 0.202540},
      {7, 228126063717356805ULL, 1152921504606846976ULL, 0.197868},
      {8, 6435ULL, 32768ULL, 0.196381},
  };
}

}  // namespace

const std::vector<AlphaDaggerCell>& alpha_dagger_table() {
  static const std::vector<AlphaDaggerCell> table = make_alpha_dagger_table();
  return table;
}

const std::vector<BinomProductCell>& binom_product_table() {
  static const std::vector<BinomProductCell> table = make_binom_product_table();
  return table;
}

}  // namespace bernmean::golden
