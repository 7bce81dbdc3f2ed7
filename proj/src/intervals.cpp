#include "bernmean/intervals.hpp"

#include <cmath>
#include <stdexcept>

#include "bernmean/inverse.hpp"
#include "bernmean/poibin.hpp"
#include "bernmean/special.hpp"

namespace bernmean {

namespace {

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

constexpr const char* kNoteBinomLikeAlpha =
    "binomial-like bound is only valid for alpha <= 1/2";
constexpr const char* kNoteClopperPearson =
    "i.i.d.-only reference; not a valid bound for non-identical trials";

}  // namespace

void CIQuery::validate() const {
  if (n < 1) throw std::domain_error("CIQuery: n must be >= 1");
  if (k < 0 || k > n) throw std::domain_error("CIQuery: k outside [0, n]");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::domain_error("CIQuery: alpha outside [0,1]");
  }
}

IntervalResult qhat_f(const CIQuery& q) {
  q.validate();
  const double v = f_tilde(InverseQuery{q.n, q.k - 1, q.alpha});
  return {Method::F, Side::Lower, v, q};
}

IntervalResult qhat_f_upper(const CIQuery& q) {
  q.validate();
  const double v = f_tilde(InverseQuery{q.n, q.n - q.k - 1, q.alpha});
  return {Method::F, Side::Upper, 1.0 - v, q};
}

double alpha_star(int n, int k) {
  if (n < 1) throw std::domain_error("alpha_star: n must be >= 1");
  if (k < 1 || k > n) throw std::domain_error("alpha_star: k outside [1, n]");
  return alpha_dagger(HoeffdingIndex(n, k - 1));
}

IntervalResult qhat_g(const CIQuery& q) {
  q.validate();
  const double v = g_tilde_inv(InverseQuery{q.n, q.k - 1, q.alpha});
  return {Method::G, Side::Lower, v, q};
}

IntervalResult qhat_g_upper(const CIQuery& q) {
  q.validate();
  const double v = g_tilde_inv(InverseQuery{q.n, q.n - q.k - 1, q.alpha});
  return {Method::G, Side::Upper, 1.0 - v, q};
}

IntervalResult qhat_hoeffding(const CIQuery& q) {
  q.validate();
  if (q.alpha == 0.0) {
    throw std::domain_error("qhat_hoeffding: bound diverges at alpha = 0");
  }
  const double raw =
      double(q.k) / q.n - std::sqrt(-std::log(q.alpha) / (2.0 * q.n));
  return {Method::Hoeffding, Side::Lower, clamp01(raw), q};
}

IntervalResult qhat_binomlike(const CIQuery& q) {
  q.validate();
  IntervalResult r{Method::BinomLike, Side::Lower, 0.0, q};
  if (q.k >= 2) {
    r.value = special::inv_reg_inc_beta(q.alpha, double(q.k - 1),
                                        double(q.n - q.k + 2));
  }
  if (q.alpha > 0.5) {
    r.advisory = true;
    r.note = kNoteBinomLikeAlpha;
  }
  return r;
}

IntervalResult qhat_clopper_pearson(const CIQuery& q) {
  q.validate();
  IntervalResult r{Method::ClopperPearson, Side::Lower, 0.0, q};
  r.advisory = true;
  r.note = kNoteClopperPearson;
  if (q.k >= 1) {
    r.value =
        special::inv_reg_inc_beta(q.alpha, double(q.k), double(q.n - q.k + 1));
  }
  return r;
}

IntervalResult estimate(Method method, Side side, const CIQuery& q) {
  if (side == Side::Upper) {
    IntervalResult lower = estimate(method, Side::Lower, {q.n, q.n - q.k, q.alpha});
    return {method, Side::Upper, 1.0 - lower.value, q, lower.advisory, lower.note};
  }
  switch (method) {
    case Method::F:
      return qhat_f(q);
    case Method::G:
      return qhat_g(q);
    case Method::Hoeffding:
      return qhat_hoeffding(q);
    case Method::BinomLike:
      return qhat_binomlike(q);
    case Method::ClopperPearson:
      return qhat_clopper_pearson(q);
  }
  throw std::logic_error("estimate: unknown method");
}

const char* method_name(Method m) {
  switch (m) {
    case Method::F: return "f";
    case Method::G: return "g";
    case Method::Hoeffding: return "hoeffding";
    case Method::BinomLike: return "binomlike";
    case Method::ClopperPearson: return "clopper-pearson";
  }
  return "?";
}

const char* side_name(Side s) { return s == Side::Lower ? "lower" : "upper"; }

Method parse_method(const std::string& name) {
  if (name == "f") return Method::F;
  if (name == "g") return Method::G;
  if (name == "hoeffding" || name == "h") return Method::Hoeffding;
  if (name == "binomlike" || name == "q1") return Method::BinomLike;
  if (name == "clopper-pearson" || name == "cp") return Method::ClopperPearson;
  throw std::invalid_argument("unknown method: " + name);
}

}  // namespace bernmean
