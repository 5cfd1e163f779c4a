#include "cnsgt/awh/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cnsgt/error.hpp"

namespace cnsgt::awh {

namespace {

constexpr double kInnerTol = 1e-12;
constexpr double kOuterTol = 1e-10;
constexpr unsigned kMaxDepth = 20;

struct Integrand {
  const SpectralWindow& f;
  const SpectralWindow& psi;
  const WarpSpec& warp;
  double f_lo;
  double f_hi;
  std::vector<double> f_breaks;
  std::vector<double> psi_breaks;
  double p_lo;
  double p_hi;

  /// int |f^(xi)|^2 |psi^(beta (xi - eta))|^2 dxi |beta|^s at a fixed omega.
  double inner(double omega) const {
    const double beta = warp.beta(omega);
    const double eta = warp.eta(omega);
    double lo = f_lo;
    double hi = f_hi;
    std::vector<double> cuts;
    if (beta != 0.0) {
      double a = eta + p_lo / beta;
      double b = eta + p_hi / beta;
      if (a > b) std::swap(a, b);
      lo = std::max(lo, a);
      hi = std::min(hi, b);
      for (double z : psi_breaks) cuts.push_back(eta + z / beta);
    }
    if (!(lo < hi)) return 0.0;
    cuts.insert(cuts.end(), f_breaks.begin(), f_breaks.end());
    cuts.push_back(lo);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    auto g = [&](double xi) { return std::norm(f(xi)) * std::norm(psi(beta * (xi - eta))); };
    double total = 0.0;
    double prev = lo;
    for (double c : cuts) {
      if (c <= prev) continue;
      if (c > hi) c = hi;
      double err = 0.0;
      total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, prev, c, kMaxDepth, kInnerTol, &err);
      prev = c;
      if (prev >= hi) break;
    }
    return total * std::pow(std::abs(beta), warp.s);
  }
};

/// int over a <= |omega| <= b, both signs, through omega = +-(e^v - 1).
double shell(const Integrand& in, double a, double b) {
  double total = 0.0;
  for (double sign : {-1.0, 1.0}) {
    auto h = [&](double v) {
      const double omega = sign * std::expm1(v);
      return in.inner(omega) * std::exp(v);
    };
    double err = 0.0;
    double l1 = 0.0;
    const double va = std::log1p(a);
    const double vb = std::log1p(b);
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(h, va, vb, kMaxDepth, kOuterTol, &err, &l1);
    if (!std::isfinite(value) || err > 1e-6 * std::max(1.0, l1)) {
      std::ostringstream os;
      os << "omega quadrature on [" << (sign < 0 ? -b : a) << ", " << (sign < 0 ? -a : b)
         << "] did not converge: value " << value << ", error estimate " << err << ", L1 " << l1;
      throw Error(Errc::numeric, os.str());
    }
    total += value;
  }
  return total;
}

}  // namespace

GrowthStudy norm_growth_study(const SpectralWindow& f_hat, const SpectralWindow& psi_hat, const WarpSpec& warp,
                              const std::vector<double>& truncations) {
  if (truncations.empty()) throw Error(Errc::invalid_spec, "growth study needs at least one truncation");
  for (std::size_t k = 0; k < truncations.size(); ++k) {
    if (!(truncations[k] > 0.0) || !std::isfinite(truncations[k]) || (k > 0 && !(truncations[k] > truncations[k - 1]))) {
      throw Error(Errc::invalid_spec, "truncations must be finite, positive and strictly increasing");
    }
  }
  if (!warp.beta || !warp.eta) throw Error(Errc::invalid_warp, "warp has no beta/eta");
  const auto [f_lo, f_hi] = f_hat.support();
  const auto [p_lo, p_hi] = psi_hat.support();
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi)) {
    throw Error(Errc::invalid_spec, "growth study needs f^ with bounded support");
  }
  const Integrand in{f_hat, psi_hat, warp, f_lo, f_hi, f_hat.breakpoints(), psi_hat.breakpoints(), p_lo, p_hi};

  GrowthStudy study;
  double integral = 0.0;
  double previous = 0.0;
  for (std::size_t k = 0; k < truncations.size(); ++k) {
    const double r = truncations[k];
    GrowthRow row;
    row.truncation = r;
    integral += shell(in, previous, r);
    row.integral = integral;
    if (k > 0) {
      row.increment = integral - study.rows.back().integral;
      row.log_slope = row.increment / std::log(r / previous);
    }
    study.rows.push_back(row);
    previous = r;
  }

  if (study.rows.size() < 2) {
    study.verdict = "inconclusive";
    return study;
  }
  double smin = study.rows[1].log_slope;
  double smax = smin;
  bool increasing = true;
  for (std::size_t k = 1; k < study.rows.size(); ++k) {
    smin = std::min(smin, study.rows[k].log_slope);
    smax = std::max(smax, study.rows[k].log_slope);
    increasing = increasing && study.rows[k].increment > 0.0;
  }
  study.slope_spread = smax > 0.0 ? (smax - smin) / smax : 0.0;
  const auto& last = study.rows.back();
  study.last_relative_increment = last.integral != 0.0 ? std::abs(last.increment / last.integral) : 0.0;
  if (study.last_relative_increment <= kPlateauTolerance) {
    study.verdict = "converges";
  } else if (increasing && study.slope_spread <= kLogTrendTolerance) {
    study.verdict = "unbounded growth";
  } else {
    study.verdict = "inconclusive";
  }
  return study;
}

}  // namespace cnsgt::awh
