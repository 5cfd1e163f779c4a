#pragma once

// Continuous nonstationary Gabor systems on a finite abelian group.
//
// A WindowFamily is a measure space (Y, mu) of channels, each carrying a
// window psi_y and a weight mu(y) >= 0. Depending on the kind, the atoms are
//   translation:  Psi(x, y)  = T_x psi_y,   x in G,    Haar weight 1
//   character:    Psi(xi, y) = M_xi psi_y,  xi in G^,  Haar weight 1/|G|
// The resolution operator C_{Psi,Phi} f = sum <f, Psi> Phi haar mu is a
// Fourier multiplier (translation kind) or a pointwise multiplier (character
// kind) with symbol m_{Psi,Phi}.

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "cnsgt/group.hpp"

namespace cnsgt {

inline constexpr double kDefaultRelTol = 1e-12;
inline constexpr std::size_t kDenseOrderLimit = 4096;

enum class SystemKind { translation, character };

struct Channel {
  std::string label;
  Signal window;
  double weight = 1.0;
};

class WindowFamily {
 public:
  /// Validates that every window is a time-side signal on `group`, weights
  /// are finite and nonnegative, and at least one channel has a nonzero
  /// window with positive weight.
  WindowFamily(Group group, SystemKind kind, std::vector<Channel> channels);

  const Group& group() const noexcept { return group_; }
  SystemKind kind() const noexcept { return kind_; }
  const std::vector<Channel>& channels() const noexcept { return channels_; }
  std::size_t size() const noexcept { return channels_.size(); }

  /// Haar weight of one point of the atom index (G or its dual).
  double point_weight() const noexcept;

  std::vector<std::string> labels() const;
  std::vector<double> weights() const;

  friend bool operator==(const WindowFamily& a, const WindowFamily& b);

 private:
  Group group_;
  SystemKind kind_;
  std::vector<Channel> channels_;
};

/// Coefficients F(x, y) on X = (G or G^) x Y, stored channel-major:
/// values()[channel * order + point].
class CoefficientField {
 public:
  CoefficientField(Group group, SystemKind kind, std::vector<std::string> labels,
                   std::vector<double> weights, ComplexVector values);
  static CoefficientField zeros(const WindowFamily& family);

  const Group& group() const noexcept { return group_; }
  SystemKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t points() const noexcept { return group_.order(); }
  std::size_t channels() const noexcept { return labels_.size(); }

  Complex at(std::size_t point, std::size_t channel) const { return values_[channel * points() + point]; }
  Complex& at(std::size_t point, std::size_t channel) { return values_[channel * points() + point]; }
  const ComplexVector& values() const noexcept { return values_; }
  ComplexVector& values() noexcept { return values_; }

  double point_weight() const noexcept;
  /// haar(x) * mu(y) for flat index channel * order + point.
  double measure(std::size_t flat) const noexcept { return point_weight() * weights_[flat / points()]; }

  bool same_layout(const CoefficientField& other) const;

 private:
  Group group_;
  SystemKind kind_;
  std::vector<std::string> labels_;
  std::vector<double> weights_;
  ComplexVector values_;
};

/// <F, H> in L2(X, mu).
Complex inner(const CoefficientField& F, const CoefficientField& H);
double norm_squared(const CoefficientField& F);

class FourierSymbol {
 public:
  FourierSymbol(Group group, Side domain, ComplexVector values);

  const Group& group() const noexcept { return group_; }
  /// spectral for translation systems, time for character systems.
  Side domain() const noexcept { return domain_; }
  const ComplexVector& values() const noexcept { return values_; }
  Complex operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

  double min_abs() const;
  double max_abs() const;

 private:
  Group group_;
  Side domain_;
  ComplexVector values_;
};

/// Psi(point, channel) as an explicit time-side vector.
Signal atom(const WindowFamily& family, std::size_t point, std::size_t channel);

/// V_Psi f(x, y) = <f, Psi(x, y)>.
CoefficientField analyze(const Signal& f, const WindowFamily& family);
/// V*_Psi F = sum_{x,y} F(x, y) Psi(x, y) haar(x) mu(y).
Signal synthesize(const CoefficientField& F, const WindowFamily& family);

/// m_{Psi,Phi} = sum_y conj(psi_y^) phi_y^ mu(y) (hats dropped for the
/// character kind). Families must agree on group, kind, labels and weights.
FourierSymbol fourier_symbol(const WindowFamily& psi, const WindowFamily& phi);

/// max over the symbol domain of sum_y |psi_y^ phi_y^| mu(y).
double cross_admissibility_bound(const WindowFamily& psi, const WindowFamily& phi);

Signal multiplier_apply(const Signal& f, const FourierSymbol& m);
/// Applies the multiplier with symbol 1/m. Throws NotInvertibleError when
/// min|m| <= rel_tol * max|m|.
Signal multiplier_invert(const Signal& f, const FourierSymbol& m, double rel_tol = kDefaultRelTol);

/// Dual windows S^{-1} psi_y with unchanged labels and weights. Throws
/// NotInvertibleError(not_a_frame) when min m_Psi <= rel_tol * max m_Psi.
WindowFamily canonical_dual(const WindowFamily& family, double rel_tol = kDefaultRelTol);

/// C_{Psi,Phi} as an order x order matrix, assembled from rank-one terms.
Eigen::MatrixXcd dense_frame_operator(const WindowFamily& psi, const WindowFamily& phi);

namespace detail {
void require_compatible(const WindowFamily& psi, const WindowFamily& phi);
Eigen::VectorXcd to_eigen(const Signal& s);
}  // namespace detail

}  // namespace cnsgt
