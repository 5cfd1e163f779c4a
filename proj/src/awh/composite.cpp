#include "cnsgt/awh/composite.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cnsgt/error.hpp"

namespace cnsgt::awh {

namespace {

using Poly = std::vector<Complex>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly conjugated(Poly p) {
  for (auto& c : p) c = std::conj(c);
  return p;
}

/// p(z) = q(z) (z - root) + remainder.
std::pair<Poly, Complex> divide_linear(const Poly& p, double root) {
  if (p.size() == 1) return {Poly{0.0}, p[0]};
  Poly q(p.size() - 1);
  q.back() = p.back();
  for (std::size_t k = q.size() - 1; k > 0; --k) q[k - 1] = p[k] + root * q[k];
  return {q, p[0] + root * q[0]};
}

Complex integrate_poly(const Poly& p, double a, double b) {
  Complex fa{}, fb{};
  for (std::size_t k = p.size(); k-- > 0;) {
    const double inv = 1.0 / static_cast<double>(k + 1);
    fa = fa * a + p[k] * inv;
    fb = fb * b + p[k] * inv;
  }
  return fb * b - fa * a;
}

double magnitude(const Poly& p) {
  double m = 0.0;
  for (const auto& c : p) m += std::abs(c);
  return m;
}

/// int_a^b r(z) / (1 + z) dz for -1 <= a <= b <= 1.
Complex integrate_plus(const Poly& r, double a, double b) {
  if (!(a < b)) return {};
  auto [q, c] = divide_linear(r, -1.0);
  Complex out = integrate_poly(q, a, b);
  if (std::abs(c) > 1e-14 * magnitude(r)) {
    if (a <= -1.0) throw Error(Errc::numeric, "integrand r/(1+z) is not integrable at z = -1 (r(-1) != 0)");
    out += c * std::log((1.0 + b) / (1.0 + a));
  }
  return out;
}

/// int_a^b r(z) / (1 - z) dz for -1 <= a <= b <= 1.
Complex integrate_minus(const Poly& r, double a, double b) {
  if (!(a < b)) return {};
  auto [q, c] = divide_linear(r, 1.0);
  // r = q (z - 1) + c  =>  r / (1 - z) = -q + c / (1 - z)
  Complex out = -integrate_poly(q, a, b);
  if (std::abs(c) > 1e-14 * magnitude(r)) {
    if (b >= 1.0) throw Error(Errc::numeric, "integrand r/(1-z) is not integrable at z = 1 (r(1) != 0)");
    out += c * std::log((1.0 - a) / (1.0 - b));
  }
  return out;
}

void require_unit_support(const SpectralWindow& w, const char* which) {
  const auto [lo, hi] = w.support();
  if (lo < -1.0 || hi > 1.0) {
    throw Error(Errc::domain, std::string(which) + " window must be supported in [-1, 1]");
  }
}

double clip(double xi) { return std::clamp(xi, -1.0, 1.0); }

}  // namespace

Complex composite_closed_form(const SpectralWindow& psi, const SpectralWindow& phi, double xi) {
  if (!psi.is_piecewise_polynomial() || !phi.is_piecewise_polynomial()) {
    throw Error(Errc::form, "closed form needs piecewise polynomial windows");
  }
  require_unit_support(psi, "psi");
  require_unit_support(phi, "phi");
  const double c = clip(xi);
  const auto& pp = std::get<PiecewisePolynomial>(psi.form()).pieces;
  const auto& qq = std::get<PiecewisePolynomial>(phi.form()).pieces;
  Complex m{};
  for (const auto& p : pp) {
    for (const auto& q : qq) {
      const double lo = std::max(p.lo, q.lo);
      const double hi = std::min(p.hi, q.hi);
      if (!(lo < hi)) continue;
      const Poly r = multiply(conjugated(p.coeffs), q.coeffs);
      m += integrate_plus(r, lo, std::min(hi, c));
      m += integrate_minus(r, std::max(lo, c), hi);
    }
  }
  return m;
}

Complex composite_symbol_integral(const SpectralWindow& psi, const SpectralWindow& phi, double xi) {
  require_unit_support(psi, "psi");
  require_unit_support(phi, "phi");
  const double c = clip(xi);
  const double edge = std::nextafter(1.0, 0.0);
  for (double z : {-1.0, edge}) {
    if (std::abs(std::conj(psi(z)) * phi(z)) > 1e-12) {
      throw Error(Errc::numeric, "conj(psi^) phi^ does not vanish at z = " + std::to_string(std::round(z)) +
                                     "; the composite symbol diverges");
    }
  }
  std::vector<double> cuts{-1.0, 1.0, c};
  for (double b : psi.breakpoints()) cuts.push_back(std::clamp(b, -1.0, 1.0));
  for (double b : phi.breakpoints()) cuts.push_back(std::clamp(b, -1.0, 1.0));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  Complex m{};
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k];
    const double b = cuts[k + 1];
    const bool plus = b <= c;
    auto value = [&](double z) {
      return std::conj(psi(z)) * phi(z) / (plus ? 1.0 + z : 1.0 - z);
    };
    const double re = GK::integrate([&](double z) { return value(z).real(); }, a, b, 15, 1e-14);
    const double im = GK::integrate([&](double z) { return value(z).imag(); }, a, b, 15, 1e-14);
    m += Complex(re, im);
  }
  if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
    throw Error(Errc::numeric, "composite symbol integral is not finite at xi = " + std::to_string(xi));
  }
  return m;
}

DerivativeReport derivative_identity_check(const SpectralWindow& psi, const SpectralWindow& phi,
                                           const std::vector<double>& xi_samples, double tolerance, double step,
                                           double edge_margin) {
  const bool exact = psi.is_piecewise_polynomial() && phi.is_piecewise_polynomial();
  auto m = [&](double x) { return exact ? composite_closed_form(psi, phi, x) : composite_symbol_integral(psi, phi, x); };
  DerivativeReport report;
  report.tolerance = tolerance;
  for (double xi : xi_samples) {
    if (!(std::abs(xi) <= 1.0 - edge_margin) || std::abs(xi) + step >= 1.0) {
      throw Error(Errc::domain, "derivative sample " + std::to_string(xi) + " is too close to +-1");
    }
    DerivativeRow row;
    row.xi = xi;
    row.finite_difference = (m(xi + step) - m(xi - step)) / (2.0 * step);
    row.formula = -(2.0 * xi / (1.0 - xi * xi)) * std::conj(psi(xi)) * phi(xi);
    row.error = std::abs(row.finite_difference - row.formula) / std::max(1.0, std::abs(row.formula));
    report.max_error = std::max(report.max_error, row.error);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace cnsgt::awh
