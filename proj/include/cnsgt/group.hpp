#pragma once

// Fourier analysis on finite abelian groups G = Z_{N1} x ... x Z_{Nd}.
//
// Conventions:
//   * Elements are enumerated row-major, last factor fastest. This order is
//     part of every file format.
//   * The dual group uses the same index set as G.
//   * Haar measure is counting measure on G and counting/|G| on the dual, so
//     the forward transform f^(xi) = sum_x f(x) conj(chi_xi(x)) is unitary
//     between the two weighted L2 spaces.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cnsgt {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

struct GroupElement {
  std::vector<std::size_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class Group {
 public:
  /// Throws Error(invalid_group) for an empty factor list or a zero factor.
  explicit Group(std::vector<std::size_t> factors);

  const std::vector<std::size_t>& factors() const noexcept { return factors_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return factors_.size(); }

  /// Haar weight of one point of G (always 1).
  static constexpr double haar_weight() noexcept { return 1.0; }
  /// Haar weight of one point of the dual (1/order).
  double dual_haar_weight() const noexcept { return 1.0 / static_cast<double>(order_); }

  bool contains(const GroupElement& e) const noexcept;
  /// Reduces each coordinate modulo its factor (accepts any residues).
  GroupElement reduce(std::span<const long long> coords) const;

  GroupElement element(std::size_t index) const;
  std::size_t index(const GroupElement& e) const;

  /// Index arithmetic without materializing elements.
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t subtract(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;

  friend bool operator==(const Group& a, const Group& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<std::size_t> factors_;
  std::vector<std::size_t> strides_;
  std::size_t order_;
};

/// Same as Group(factors).
Group make_group(std::vector<std::size_t> factors);

enum class Side { time, spectral };

class Signal {
 public:
  Signal(Group group, Side side, ComplexVector values);
  /// Zero signal.
  Signal(Group group, Side side);

  const Group& group() const noexcept { return group_; }
  Side side() const noexcept { return side_; }
  const ComplexVector& values() const noexcept { return values_; }
  ComplexVector& values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  Complex operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }

  /// Squared L2 norm under the Haar weight of the signal's side.
  double norm_squared() const;
  double norm() const;

  static Signal delta(const Group& group, std::size_t index, Side side = Side::time);
  static Signal constant(const Group& group, Complex value, Side side = Side::time);

 private:
  Group group_;
  Side side_;
  ComplexVector values_;
};

/// Inner product <f, g> = sum f conj(g) * haar, on a common side.
Complex inner(const Signal& f, const Signal& g);

enum class Direction { forward, inverse };

/// chi_xi(x) = exp(2 pi i sum_k xi_k x_k / N_k).
Complex character_eval(const Group& group, const GroupElement& xi, const GroupElement& x);
/// Same, by flat index.
Complex character_eval(const Group& group, std::size_t xi, std::size_t x);

/// Forward takes a time-side signal to the spectral side, inverse goes back.
Signal fourier(const Signal& signal, Direction direction);

/// T_z f(x) = f(x - z).
Signal translate(const Signal& signal, const GroupElement& z);
/// M_xi f(x) = chi_xi(x) f(x).
Signal modulate(const Signal& signal, const GroupElement& xi);
/// (f * g)(y) = sum_x f(x) g(y - x), computed through the transform.
Signal convolve(const Signal& f, const Signal& g);

namespace detail {

/// g*(x) = conj(g(-x)).
Signal involution(const Signal& g);

/// In-place multi-dimensional DFT over the group layout. sign = -1 is the
/// forward kernel conj(chi); +1 the unnormalized inverse kernel.
void dft_inplace(const Group& group, std::span<Complex> data, int sign);

void require_side(const Signal& s, Side side, const char* what);
void require_same_group(const Group& a, const Group& b, const char* what);

}  // namespace detail

}  // namespace cnsgt
