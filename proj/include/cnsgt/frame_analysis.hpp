#pragma once

#include <Eigen/Dense>

#include <string_view>
#include <vector>

#include "cnsgt/nsgt.hpp"

namespace cnsgt {

enum class FrameKind { frame, bessel_only, reproducing_pair, not_reproducing };

std::string_view to_string(FrameKind kind) noexcept;

struct FrameReport {
  FrameKind kind = FrameKind::not_reproducing;
  double lower = 0.0;        // A
  double upper = 0.0;        // B
  double cross_bound = 0.0;  // C
  bool tight = false;
  double symbol_min_abs = 0.0;
  double symbol_max_abs = 0.0;
};

/// Verdict from the symbol. When psi == phi the family is judged as a frame
/// (A = min m, B = max m); otherwise as a reproducing pair on |m|. The
/// thresholds only gate `kind`; the reported numbers are raw.
FrameReport assess(const WindowFamily& psi, const WindowFamily& phi, double rel_tol = kDefaultRelTol);
FrameReport assess(const WindowFamily& family, double rel_tol = kDefaultRelTol);

/// Dense reproducing kernel on X = points x channels (flat index
/// channel * order + point, matching CoefficientField).
struct KernelMatrix {
  Eigen::MatrixXcd values;
  /// haar(x) * mu(y) per flat index.
  std::vector<double> weights;
  Group group;
  SystemKind kind;
  std::vector<std::string> labels;
};

inline constexpr std::size_t kKernelSideLimit = 4096;

/// K((x,y), (x',y')) = <C^{-1} Phi(x',y'), Psi(x,y)>.
KernelMatrix reproducing_kernel(const WindowFamily& psi, const WindowFamily& phi, double rel_tol = kDefaultRelTol);

/// R(F)(x) = sum_{x'} K(x, x') F(x') haar(x') mu(y').
CoefficientField kernel_apply(const KernelMatrix& K, const CoefficientField& F);

/// Explicit atoms (columns) together with their measure weights.
struct AtomSystem {
  Eigen::MatrixXcd atoms;
  std::vector<double> weights;
};

AtomSystem atom_system(const WindowFamily& family);

/// sum_k w_k phi_k psi_k^H.
Eigen::MatrixXcd resolution_operator(const AtomSystem& psi, const AtomSystem& phi);

/// Unitary T on L2(G) and unimodular phases tau over the atom index.
struct EquivalenceSpec {
  Eigen::MatrixXcd unitary;
  Eigen::VectorXcd phase;

  static EquivalenceSpec identity(std::size_t order, std::size_t atoms);
  /// Unitary DFT matrix (1/sqrt(order)) conj(chi_xi(x)).
  static EquivalenceSpec fourier(const Group& group, std::size_t atoms);
  static EquivalenceSpec phase_diagonal(Eigen::VectorXcd diagonal, std::size_t atoms);

  /// Throws Error(invalid_spec) unless T is unitary and |tau| = 1 to 1e-10.
  void validate(std::size_t order, std::size_t atoms) const;
};

struct TransportResult {
  AtomSystem psi;
  AtomSystem phi;
  Eigen::MatrixXcd original;     // C_{Psi,Phi}
  Eigen::MatrixXcd transported;  // C_{Psi~,Phi~}
  double residual = 0.0;         // max |C~ - T C T*|
  bool original_invertible = false;
  bool transported_invertible = false;

  bool verdict_preserved() const { return original_invertible == transported_invertible; }
};

/// Psi~(x, y) = tau(x, y) T Psi(x, y), same for Phi. Dense, small groups only.
TransportResult transport(const WindowFamily& psi, const WindowFamily& phi, const EquivalenceSpec& spec,
                          double rel_tol = kDefaultRelTol);

}  // namespace cnsgt
