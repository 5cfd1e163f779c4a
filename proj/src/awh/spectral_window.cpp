#include "cnsgt/awh/spectral_window.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cnsgt/error.hpp"

namespace cnsgt::awh {

namespace {

Complex horner(const std::vector<Complex>& c, double z) {
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

struct Validate {
  void operator()(const PiecewisePolynomial& p) const {
    if (p.pieces.empty()) throw Error(Errc::form, "piecewise polynomial has no pieces");
    double prev_hi = -std::numeric_limits<double>::infinity();
    for (const auto& piece : p.pieces) {
      if (!(piece.lo < piece.hi) || !std::isfinite(piece.lo) || !std::isfinite(piece.hi)) {
        throw Error(Errc::form, "polynomial piece needs finite lo < hi");
      }
      if (piece.lo < prev_hi) throw Error(Errc::form, "polynomial pieces must be sorted and disjoint");
      prev_hi = piece.hi;
    }
  }
  void operator()(const Gaussian& g) const {
    if (!(g.width > 0.0) || !std::isfinite(g.center)) throw Error(Errc::form, "gaussian needs width > 0");
    if (!(g.support_lo < g.support_hi)) throw Error(Errc::form, "gaussian support is empty");
  }
  void operator()(const Sampled& s) const {
    if (s.grid.size() < 2 || s.grid.size() != s.values.size()) {
      throw Error(Errc::form, "sampled window needs >= 2 points and matching value count");
    }
    if (!std::is_sorted(s.grid.begin(), s.grid.end()) ||
        std::adjacent_find(s.grid.begin(), s.grid.end()) != s.grid.end()) {
      throw Error(Errc::form, "sample grid must be strictly increasing");
    }
  }
};

}  // namespace

SpectralWindow::SpectralWindow(Form form) : form_(std::move(form)) { std::visit(Validate{}, form_); }

Complex SpectralWindow::operator()(double xi) const {
  if (const auto* p = std::get_if<PiecewisePolynomial>(&form_)) {
    for (const auto& piece : p->pieces) {
      if (xi >= piece.lo && xi < piece.hi) return horner(piece.coeffs, xi);
    }
    return {};
  }
  if (const auto* g = std::get_if<Gaussian>(&form_)) {
    if (xi < g->support_lo || xi >= g->support_hi) return {};
    const double u = xi - g->center;
    return g->amplitude * horner(g->poly, u) * std::exp(-u * u / (2.0 * g->width * g->width));
  }
  const auto& s = std::get<Sampled>(form_);
  if (xi < s.grid.front() || xi > s.grid.back()) return {};
  auto it = std::upper_bound(s.grid.begin(), s.grid.end(), xi);
  if (it == s.grid.end()) return s.values.back();
  const auto k = static_cast<std::size_t>(it - s.grid.begin());
  const double t = (xi - s.grid[k - 1]) / (s.grid[k] - s.grid[k - 1]);
  return (1.0 - t) * s.values[k - 1] + t * s.values[k];
}

std::pair<double, double> SpectralWindow::support() const {
  if (const auto* p = std::get_if<PiecewisePolynomial>(&form_)) return {p->pieces.front().lo, p->pieces.back().hi};
  if (const auto* g = std::get_if<Gaussian>(&form_)) return {g->support_lo, g->support_hi};
  const auto& s = std::get<Sampled>(form_);
  return {s.grid.front(), s.grid.back()};
}

std::vector<double> SpectralWindow::breakpoints() const {
  std::vector<double> out;
  if (const auto* p = std::get_if<PiecewisePolynomial>(&form_)) {
    for (const auto& piece : p->pieces) {
      out.push_back(piece.lo);
      out.push_back(piece.hi);
    }
  } else if (const auto* g = std::get_if<Gaussian>(&form_)) {
    if (std::isfinite(g->support_lo)) out.push_back(g->support_lo);
    if (std::isfinite(g->support_hi)) out.push_back(g->support_hi);
  } else {
    out = std::get<Sampled>(form_).grid;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SpectralWindow SpectralWindow::scaled(Complex c) const {
  Form f = form_;
  if (auto* p = std::get_if<PiecewisePolynomial>(&f)) {
    for (auto& piece : p->pieces) {
      for (auto& k : piece.coeffs) k *= c;
    }
  } else if (auto* g = std::get_if<Gaussian>(&f)) {
    g->amplitude *= c;
  } else {
    for (auto& v : std::get<Sampled>(f).values) v *= c;
  }
  return SpectralWindow(std::move(f));
}

SpectralWindow SpectralWindow::polynomial(double lo, double hi, std::vector<Complex> coeffs) {
  return SpectralWindow(PiecewisePolynomial{{PolynomialPiece{lo, hi, std::move(coeffs)}}});
}

SpectralWindow SpectralWindow::indicator(double lo, double hi) { return polynomial(lo, hi, {1.0}); }

SpectralWindow SpectralWindow::unit_gaussian(double center, double width) {
  Gaussian g;
  g.center = center;
  g.width = width;
  g.amplitude = 1.0 / std::sqrt(width * std::sqrt(std::numbers::pi));
  return SpectralWindow(g);
}

std::pair<SpectralWindow, SpectralWindow> composite_pair() {
  return {SpectralWindow::polynomial(-1.0, 1.0, {1.0, -1.0}), SpectralWindow::polynomial(-1.0, 1.0, {1.0, 1.0})};
}

}  // namespace cnsgt::awh
