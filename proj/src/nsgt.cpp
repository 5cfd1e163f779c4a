#include "cnsgt/nsgt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cnsgt/error.hpp"

namespace cnsgt {

namespace {

double haar_for(SystemKind kind, const Group& g) {
  return kind == SystemKind::translation ? Group::haar_weight() : g.dual_haar_weight();
}

ComplexVector spectrum(const Signal& s) { return fourier(s, Direction::forward).values(); }

}  // namespace

WindowFamily::WindowFamily(Group group, SystemKind kind, std::vector<Channel> channels)
    : group_(std::move(group)), kind_(kind), channels_(std::move(channels)) {
  if (channels_.empty()) throw Error(Errc::invalid_spec, "window family has no channels");
  bool any_active = false;
  for (const auto& ch : channels_) {
    detail::require_same_group(ch.window.group(), group_, "window family");
    detail::require_side(ch.window, Side::time, "window family");
    if (!std::isfinite(ch.weight) || ch.weight < 0.0) {
      throw Error(Errc::invalid_spec, "channel '" + ch.label + "' has a negative or non-finite weight");
    }
    if (ch.weight > 0.0 && ch.window.norm_squared() > 0.0) any_active = true;
  }
  if (!any_active) throw Error(Errc::invalid_spec, "no channel has both a nonzero window and a positive weight");
}

double WindowFamily::point_weight() const noexcept { return haar_for(kind_, group_); }

std::vector<std::string> WindowFamily::labels() const {
  std::vector<std::string> out;
  out.reserve(channels_.size());
  for (const auto& ch : channels_) out.push_back(ch.label);
  return out;
}

std::vector<double> WindowFamily::weights() const {
  std::vector<double> out;
  out.reserve(channels_.size());
  for (const auto& ch : channels_) out.push_back(ch.weight);
  return out;
}

bool operator==(const WindowFamily& a, const WindowFamily& b) {
  if (!(a.group_ == b.group_) || a.kind_ != b.kind_ || a.channels_.size() != b.channels_.size()) return false;
  for (std::size_t i = 0; i < a.channels_.size(); ++i) {
    const auto& ca = a.channels_[i];
    const auto& cb = b.channels_[i];
    if (ca.label != cb.label || ca.weight != cb.weight || ca.window.values() != cb.window.values()) return false;
  }
  return true;
}

CoefficientField::CoefficientField(Group group, SystemKind kind, std::vector<std::string> labels,
                                   std::vector<double> weights, ComplexVector values)
    : group_(std::move(group)),
      kind_(kind),
      labels_(std::move(labels)),
      weights_(std::move(weights)),
      values_(std::move(values)) {
  if (labels_.size() != weights_.size()) throw Error(Errc::shape_mismatch, "labels and weights differ in length");
  if (values_.size() != group_.order() * labels_.size()) {
    throw Error(Errc::shape_mismatch, "coefficient field has " + std::to_string(values_.size()) +
                                          " values, expected " + std::to_string(group_.order() * labels_.size()));
  }
}

CoefficientField CoefficientField::zeros(const WindowFamily& family) {
  return CoefficientField(family.group(), family.kind(), family.labels(), family.weights(),
                          ComplexVector(family.group().order() * family.size()));
}

double CoefficientField::point_weight() const noexcept { return haar_for(kind_, group_); }

bool CoefficientField::same_layout(const CoefficientField& other) const {
  return group_ == other.group_ && kind_ == other.kind_ && labels_ == other.labels_ && weights_ == other.weights_;
}

Complex inner(const CoefficientField& F, const CoefficientField& H) {
  if (!F.same_layout(H)) throw Error(Errc::shape_mismatch, "coefficient fields have different layouts");
  Complex acc{};
  for (std::size_t i = 0; i < F.values().size(); ++i) acc += F.values()[i] * std::conj(H.values()[i]) * F.measure(i);
  return acc;
}

double norm_squared(const CoefficientField& F) {
  double acc = 0.0;
  for (std::size_t i = 0; i < F.values().size(); ++i) acc += std::norm(F.values()[i]) * F.measure(i);
  return acc;
}

FourierSymbol::FourierSymbol(Group group, Side domain, ComplexVector values)
    : group_(std::move(group)), domain_(domain), values_(std::move(values)) {
  if (values_.size() != group_.order()) throw Error(Errc::shape_mismatch, "symbol length differs from group order");
}

double FourierSymbol::min_abs() const {
  double m = std::abs(values_.front());
  for (const auto& v : values_) m = std::min(m, std::abs(v));
  return m;
}

double FourierSymbol::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

namespace detail {

void require_compatible(const WindowFamily& psi, const WindowFamily& phi) {
  if (!(psi.group() == phi.group())) throw Error(Errc::family_mismatch, "families live on different groups");
  if (psi.kind() != phi.kind()) throw Error(Errc::family_mismatch, "families have different kinds");
  if (psi.size() != phi.size()) throw Error(Errc::family_mismatch, "families have different channel counts");
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const auto& a = psi.channels()[i];
    const auto& b = phi.channels()[i];
    if (a.label != b.label) throw Error(Errc::family_mismatch, "channel labels differ: " + a.label + " vs " + b.label);
    if (a.weight != b.weight) throw Error(Errc::family_mismatch, "weights differ on channel " + a.label);
  }
}

Eigen::VectorXcd to_eigen(const Signal& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

}  // namespace detail

Signal atom(const WindowFamily& family, std::size_t point, std::size_t channel) {
  const Group& g = family.group();
  const Signal& w = family.channels().at(channel).window;
  const GroupElement e = g.element(point);
  return family.kind() == SystemKind::translation ? translate(w, e) : modulate(w, e);
}

CoefficientField analyze(const Signal& f, const WindowFamily& family) {
  detail::require_same_group(f.group(), family.group(), "analyze");
  detail::require_side(f, Side::time, "analyze");
  const Group& g = family.group();
  const std::size_t n = g.order();
  CoefficientField out = CoefficientField::zeros(family);

  if (family.kind() == SystemKind::translation) {
    // <f, T_x psi> = (f * psi^*)(x), whose spectrum is f^ conj(psi^).
    const ComplexVector fh = spectrum(f);
    for (std::size_t c = 0; c < family.size(); ++c) {
      const ComplexVector wh = spectrum(family.channels()[c].window);
      Signal prod(g, Side::spectral);
      for (std::size_t k = 0; k < n; ++k) prod[k] = fh[k] * std::conj(wh[k]);
      const Signal v = fourier(prod, Direction::inverse);
      std::copy(v.values().begin(), v.values().end(), out.values().begin() + static_cast<std::ptrdiff_t>(c * n));
    }
  } else {
    // <f, M_xi psi> = (f conj(psi))^(xi).
    for (std::size_t c = 0; c < family.size(); ++c) {
      const Signal& w = family.channels()[c].window;
      Signal prod(g, Side::time);
      for (std::size_t x = 0; x < n; ++x) prod[x] = f[x] * std::conj(w[x]);
      const Signal v = fourier(prod, Direction::forward);
      std::copy(v.values().begin(), v.values().end(), out.values().begin() + static_cast<std::ptrdiff_t>(c * n));
    }
  }
  return out;
}

Signal synthesize(const CoefficientField& F, const WindowFamily& family) {
  const Group& g = family.group();
  if (!(F.group() == g) || F.kind() != family.kind() || F.labels() != family.labels() ||
      F.weights() != family.weights()) {
    throw Error(Errc::shape_mismatch, "coefficient field is not shaped for this family");
  }
  const std::size_t n = g.order();

  if (family.kind() == SystemKind::translation) {
    // sum_y mu(y) (F_y * phi_y), accumulated on the spectral side.
    Signal acc(g, Side::spectral);
    for (std::size_t c = 0; c < family.size(); ++c) {
      const double mu = family.channels()[c].weight;
      if (mu == 0.0) continue;
      Signal Fc(g, Side::time,
                ComplexVector(F.values().begin() + static_cast<std::ptrdiff_t>(c * n),
                              F.values().begin() + static_cast<std::ptrdiff_t>((c + 1) * n)));
      const ComplexVector Fh = spectrum(Fc);
      const ComplexVector wh = spectrum(family.channels()[c].window);
      for (std::size_t k = 0; k < n; ++k) acc[k] += mu * Fh[k] * wh[k];
    }
    return fourier(acc, Direction::inverse);
  }

  // sum_y mu(y) phi_y(t) (1/|G|) sum_xi F(xi, y) chi_xi(t).
  Signal out(g, Side::time);
  for (std::size_t c = 0; c < family.size(); ++c) {
    const double mu = family.channels()[c].weight;
    if (mu == 0.0) continue;
    Signal Fc(g, Side::spectral,
              ComplexVector(F.values().begin() + static_cast<std::ptrdiff_t>(c * n),
                            F.values().begin() + static_cast<std::ptrdiff_t>((c + 1) * n)));
    const Signal inv = fourier(Fc, Direction::inverse);
    const Signal& w = family.channels()[c].window;
    for (std::size_t x = 0; x < n; ++x) out[x] += mu * w[x] * inv[x];
  }
  return out;
}

FourierSymbol fourier_symbol(const WindowFamily& psi, const WindowFamily& phi) {
  detail::require_compatible(psi, phi);
  const Group& g = psi.group();
  const std::size_t n = g.order();
  const bool translation = psi.kind() == SystemKind::translation;
  ComplexVector m(n);
  for (std::size_t c = 0; c < psi.size(); ++c) {
    const double mu = psi.channels()[c].weight;
    if (mu == 0.0) continue;
    const ComplexVector a = translation ? spectrum(psi.channels()[c].window) : psi.channels()[c].window.values();
    const ComplexVector b = translation ? spectrum(phi.channels()[c].window) : phi.channels()[c].window.values();
    for (std::size_t k = 0; k < n; ++k) m[k] += std::conj(a[k]) * b[k] * mu;
  }
  return FourierSymbol(g, translation ? Side::spectral : Side::time, std::move(m));
}

double cross_admissibility_bound(const WindowFamily& psi, const WindowFamily& phi) {
  detail::require_compatible(psi, phi);
  const std::size_t n = psi.group().order();
  const bool translation = psi.kind() == SystemKind::translation;
  std::vector<double> acc(n, 0.0);
  for (std::size_t c = 0; c < psi.size(); ++c) {
    const double mu = psi.channels()[c].weight;
    if (mu == 0.0) continue;
    const ComplexVector a = translation ? spectrum(psi.channels()[c].window) : psi.channels()[c].window.values();
    const ComplexVector b = translation ? spectrum(phi.channels()[c].window) : phi.channels()[c].window.values();
    for (std::size_t k = 0; k < n; ++k) acc[k] += std::abs(a[k] * b[k]) * mu;
  }
  return *std::max_element(acc.begin(), acc.end());
}

namespace {

Signal apply_symbol(const Signal& f, const FourierSymbol& m, bool inverse) {
  detail::require_same_group(f.group(), m.group(), "multiplier");
  detail::require_side(f, Side::time, "multiplier");
  auto factor = [&](std::size_t k) { return inverse ? 1.0 / m[k] : m[k]; };
  if (m.domain() == Side::spectral) {
    Signal fh = fourier(f, Direction::forward);
    for (std::size_t k = 0; k < fh.size(); ++k) fh[k] *= factor(k);
    return fourier(fh, Direction::inverse);
  }
  Signal out = f;
  for (std::size_t x = 0; x < out.size(); ++x) out[x] *= factor(x);
  return out;
}

}  // namespace

Signal multiplier_apply(const Signal& f, const FourierSymbol& m) { return apply_symbol(f, m, false); }

Signal multiplier_invert(const Signal& f, const FourierSymbol& m, double rel_tol) {
  const double lo = m.min_abs();
  const double hi = m.max_abs();
  if (!(hi > 0.0) || !(lo > rel_tol * hi)) throw NotInvertibleError(Errc::not_invertible, lo, hi, rel_tol);
  return apply_symbol(f, m, true);
}

WindowFamily canonical_dual(const WindowFamily& family, double rel_tol) {
  const FourierSymbol m = fourier_symbol(family, family);
  double lo = m[0].real();
  double hi = m[0].real();
  for (const auto& v : m.values()) {
    lo = std::min(lo, v.real());
    hi = std::max(hi, v.real());
  }
  if (!(hi > 0.0) || !(lo > rel_tol * hi)) throw NotInvertibleError(Errc::not_a_frame, lo, hi, rel_tol);

  std::vector<Channel> dual;
  dual.reserve(family.size());
  for (const auto& ch : family.channels()) {
    Signal w(family.group(), Side::time);
    if (family.kind() == SystemKind::translation) {
      Signal wh = fourier(ch.window, Direction::forward);
      for (std::size_t k = 0; k < wh.size(); ++k) wh[k] /= m[k].real();
      w = fourier(wh, Direction::inverse);
    } else {
      for (std::size_t x = 0; x < w.size(); ++x) w[x] = ch.window[x] / m[x].real();
    }
    dual.push_back(Channel{ch.label, std::move(w), ch.weight});
  }
  return WindowFamily(family.group(), family.kind(), std::move(dual));
}

Eigen::MatrixXcd dense_frame_operator(const WindowFamily& psi, const WindowFamily& phi) {
  detail::require_compatible(psi, phi);
  const std::size_t n = psi.group().order();
  if (n > kDenseOrderLimit) {
    throw Error(Errc::size_guard, "group order " + std::to_string(n) + " exceeds dense limit " +
                                      std::to_string(kDenseOrderLimit));
  }
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(dim, dim);
  const double haar = psi.point_weight();
  for (std::size_t c = 0; c < psi.size(); ++c) {
    const double mu = psi.channels()[c].weight;
    if (mu == 0.0) continue;
    for (std::size_t x = 0; x < n; ++x) {
      const Eigen::VectorXcd a = detail::to_eigen(atom(psi, x, c));
      const Eigen::VectorXcd b = detail::to_eigen(atom(phi, x, c));
      C.noalias() += (haar * mu) * b * a.adjoint();
    }
  }
  return C;
}

}  // namespace cnsgt
