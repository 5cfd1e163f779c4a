#include "cnsgt/group.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <string>

#include "cnsgt/error.hpp"

namespace cnsgt {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_group: return "invalid-group";
    case Errc::invalid_element: return "invalid-element";
    case Errc::side_mismatch: return "side-mismatch";
    case Errc::group_mismatch: return "group-mismatch";
    case Errc::family_mismatch: return "family-mismatch";
    case Errc::shape_mismatch: return "shape-mismatch";
    case Errc::not_invertible: return "not-invertible";
    case Errc::not_a_frame: return "not-a-frame";
    case Errc::size_guard: return "size-guard";
    case Errc::invalid_spec: return "invalid-spec";
    case Errc::invalid_warp: return "invalid-warp";
    case Errc::singular_point: return "singular-point";
    case Errc::domain: return "domain";
    case Errc::form: return "form";
    case Errc::numeric: return "numeric";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

NotInvertibleError::NotInvertibleError(Errc code, double min_abs, double max_abs, double rel_tol)
    : Error(code, "symbol too close to singular: min|m| = " + short_number(min_abs) +
                      ", max|m| = " + short_number(max_abs) + ", rel_tol = " + short_number(rel_tol)),
      min_abs_(min_abs),
      max_abs_(max_abs) {}

Group::Group(std::vector<std::size_t> factors) : factors_(std::move(factors)), order_(1) {
  if (factors_.empty()) throw Error(Errc::invalid_group, "factor list is empty");
  strides_.assign(factors_.size(), 1);
  for (std::size_t k = factors_.size(); k-- > 0;) {
    if (factors_[k] == 0) throw Error(Errc::invalid_group, "factor " + std::to_string(k) + " is zero");
    strides_[k] = order_;
    order_ *= factors_[k];
  }
}

Group make_group(std::vector<std::size_t> factors) { return Group(std::move(factors)); }

bool Group::contains(const GroupElement& e) const noexcept {
  if (e.coords.size() != factors_.size()) return false;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (e.coords[k] >= factors_[k]) return false;
  }
  return true;
}

GroupElement Group::reduce(std::span<const long long> coords) const {
  if (coords.size() != factors_.size()) {
    throw Error(Errc::invalid_element, "element has " + std::to_string(coords.size()) +
                                          " coordinates, group has rank " + std::to_string(rank()));
  }
  GroupElement e;
  e.coords.resize(coords.size());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const auto n = static_cast<long long>(factors_[k]);
    e.coords[k] = static_cast<std::size_t>(((coords[k] % n) + n) % n);
  }
  return e;
}

GroupElement Group::element(std::size_t index) const {
  if (index >= order_) throw Error(Errc::invalid_element, "index " + std::to_string(index) + " out of range");
  GroupElement e;
  e.coords.resize(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    e.coords[k] = (index / strides_[k]) % factors_[k];
  }
  return e;
}

std::size_t Group::index(const GroupElement& e) const {
  if (!contains(e)) throw Error(Errc::invalid_element, "element is not a member of the group");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) idx += e.coords[k] * strides_[k];
  return idx;
}

std::size_t Group::add(std::size_t a, std::size_t b) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const std::size_t ak = (a / strides_[k]) % factors_[k];
    const std::size_t bk = (b / strides_[k]) % factors_[k];
    idx += ((ak + bk) % factors_[k]) * strides_[k];
  }
  return idx;
}

std::size_t Group::negate(std::size_t a) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const std::size_t ak = (a / strides_[k]) % factors_[k];
    idx += ((factors_[k] - ak) % factors_[k]) * strides_[k];
  }
  return idx;
}

std::size_t Group::subtract(std::size_t a, std::size_t b) const { return add(a, negate(b)); }

Signal::Signal(Group group, Side side, ComplexVector values)
    : group_(std::move(group)), side_(side), values_(std::move(values)) {
  if (values_.size() != group_.order()) {
    throw Error(Errc::shape_mismatch, "signal has " + std::to_string(values_.size()) +
                                          " values, group order is " + std::to_string(group_.order()));
  }
}

Signal::Signal(Group group, Side side) : group_(std::move(group)), side_(side) {
  values_.assign(group_.order(), Complex{});
}

double Signal::norm_squared() const {
  double acc = 0.0;
  for (const auto& v : values_) acc += std::norm(v);
  return side_ == Side::time ? acc : acc * group_.dual_haar_weight();
}

double Signal::norm() const { return std::sqrt(norm_squared()); }

Signal Signal::delta(const Group& group, std::size_t index, Side side) {
  if (index >= group.order()) throw Error(Errc::invalid_element, "delta index out of range");
  Signal s(group, side);
  s[index] = 1.0;
  return s;
}

Signal Signal::constant(const Group& group, Complex value, Side side) {
  return Signal(group, side, ComplexVector(group.order(), value));
}

Complex inner(const Signal& f, const Signal& g) {
  detail::require_same_group(f.group(), g.group(), "inner");
  if (f.side() != g.side()) throw Error(Errc::side_mismatch, "inner product across sides");
  Complex acc{};
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * std::conj(g[i]);
  return f.side() == Side::time ? acc : acc * f.group().dual_haar_weight();
}

Complex character_eval(const Group& group, std::size_t xi, std::size_t x) {
  if (xi >= group.order() || x >= group.order()) {
    throw Error(Errc::invalid_element, "character index out of range");
  }
  return character_eval(group, group.element(xi), group.element(x));
}

Complex character_eval(const Group& group, const GroupElement& xi, const GroupElement& x) {
  if (!group.contains(xi) || !group.contains(x)) {
    throw Error(Errc::invalid_element, "character argument is not a group element");
  }
  // Accumulate the phase as a fraction of a full turn, reduced mod 1.
  double turns = 0.0;
  for (std::size_t k = 0; k < group.rank(); ++k) {
    const std::size_t n = group.factors()[k];
    turns += static_cast<double>((xi.coords[k] * x.coords[k]) % n) / static_cast<double>(n);
  }
  turns -= std::floor(turns);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

namespace detail {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

void dft_inplace(const Group& group, std::span<Complex> data, int sign) {
  const std::size_t n = group.order();
  if (data.size() != n) throw Error(Errc::shape_mismatch, "dft buffer size");
  if (n == 1) return;

  std::vector<int> dims(group.factors().begin(), group.factors().end());
  auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (buf == nullptr) throw Error(Errc::numeric, "fftw_malloc failed");
  std::copy(data.begin(), data.end(), reinterpret_cast<Complex*>(buf));

  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf,
                         sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (plan == nullptr) {
    fftw_free(buf);
    throw Error(Errc::numeric, "fftw planning failed");
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  const auto* out = reinterpret_cast<const Complex*>(buf);
  std::copy(out, out + n, data.begin());
  fftw_free(buf);
}

void require_side(const Signal& s, Side side, const char* what) {
  if (s.side() != side) {
    throw Error(Errc::side_mismatch, std::string(what) + " expects a " +
                                         (side == Side::time ? "time" : "spectral") + "-side signal");
  }
}

void require_same_group(const Group& a, const Group& b, const char* what) {
  if (!(a == b)) throw Error(Errc::group_mismatch, std::string(what) + ": signals live on different groups");
}

Signal involution(const Signal& g) {
  const Group& grp = g.group();
  Signal out(grp, g.side());
  for (std::size_t x = 0; x < grp.order(); ++x) out[x] = std::conj(g[grp.negate(x)]);
  return out;
}

}  // namespace detail

Signal fourier(const Signal& signal, Direction direction) {
  const bool forward = direction == Direction::forward;
  detail::require_side(signal, forward ? Side::time : Side::spectral, forward ? "forward fourier" : "inverse fourier");
  Signal out(signal.group(), forward ? Side::spectral : Side::time, signal.values());
  detail::dft_inplace(out.group(), out.values(), forward ? -1 : +1);
  if (!forward) {
    const double w = out.group().dual_haar_weight();
    for (auto& v : out.values()) v *= w;
  }
  return out;
}

Signal translate(const Signal& signal, const GroupElement& z) {
  detail::require_side(signal, Side::time, "translate");
  const Group& g = signal.group();
  const std::size_t zi = g.index(z);
  Signal out(g, Side::time);
  for (std::size_t x = 0; x < g.order(); ++x) out[x] = signal[g.subtract(x, zi)];
  return out;
}

Signal modulate(const Signal& signal, const GroupElement& xi) {
  detail::require_side(signal, Side::time, "modulate");
  const Group& g = signal.group();
  const std::size_t k = g.index(xi);
  Signal out(g, Side::time);
  for (std::size_t x = 0; x < g.order(); ++x) out[x] = character_eval(g, k, x) * signal[x];
  return out;
}

Signal convolve(const Signal& f, const Signal& g) {
  detail::require_same_group(f.group(), g.group(), "convolve");
  detail::require_side(f, Side::time, "convolve");
  detail::require_side(g, Side::time, "convolve");
  Signal fh = fourier(f, Direction::forward);
  const Signal gh = fourier(g, Direction::forward);
  for (std::size_t i = 0; i < fh.size(); ++i) fh[i] *= gh[i];
  return fourier(fh, Direction::inverse);
}

}  // namespace cnsgt
