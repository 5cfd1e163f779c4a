#include "cnsgt/frame_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cnsgt/error.hpp"

namespace cnsgt {

std::string_view to_string(FrameKind kind) noexcept {
  switch (kind) {
    case FrameKind::frame: return "frame";
    case FrameKind::bessel_only: return "bessel_only";
    case FrameKind::reproducing_pair: return "reproducing_pair";
    case FrameKind::not_reproducing: return "not_reproducing";
  }
  return "unknown";
}

FrameReport assess(const WindowFamily& psi, const WindowFamily& phi, double rel_tol) {
  const FourierSymbol m = fourier_symbol(psi, phi);
  FrameReport r;
  r.symbol_min_abs = m.min_abs();
  r.symbol_max_abs = m.max_abs();
  r.cross_bound = cross_admissibility_bound(psi, phi);

  if (psi == phi) {
    // m_Psi is real and nonnegative up to rounding.
    double lo = m[0].real();
    double hi = m[0].real();
    for (const auto& v : m.values()) {
      lo = std::min(lo, v.real());
      hi = std::max(hi, v.real());
    }
    r.lower = lo;
    r.upper = hi;
    r.kind = (hi > 0.0 && lo > rel_tol * hi) ? FrameKind::frame : FrameKind::bessel_only;
    r.tight = r.kind == FrameKind::frame && std::abs(hi - lo) <= 1e-10 * hi;
  } else {
    r.lower = r.symbol_min_abs;
    r.upper = r.symbol_max_abs;
    r.kind = (r.upper > 0.0 && r.lower > rel_tol * r.upper) ? FrameKind::reproducing_pair
                                                            : FrameKind::not_reproducing;
  }
  return r;
}

FrameReport assess(const WindowFamily& family, double rel_tol) { return assess(family, family, rel_tol); }

KernelMatrix reproducing_kernel(const WindowFamily& psi, const WindowFamily& phi, double rel_tol) {
  detail::require_compatible(psi, phi);
  const std::size_t n = psi.group().order();
  const std::size_t side = n * psi.size();
  if (side > kKernelSideLimit) {
    throw Error(Errc::size_guard, "kernel side " + std::to_string(side) + " exceeds " +
                                      std::to_string(kKernelSideLimit));
  }
  const FourierSymbol m = fourier_symbol(psi, phi);

  KernelMatrix K{Eigen::MatrixXcd(static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side)),
                 std::vector<double>(side),
                 psi.group(),
                 psi.kind(),
                 psi.labels()};
  const double haar = psi.point_weight();
  for (std::size_t c = 0; c < psi.size(); ++c) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t col = c * n + x;
      K.weights[col] = haar * psi.channels()[c].weight;
      // Column (x', y') is V_Psi applied to C^{-1} Phi(x', y').
      const Signal g = multiplier_invert(atom(phi, x, c), m, rel_tol);
      const CoefficientField v = analyze(g, psi);
      for (std::size_t row = 0; row < side; ++row) {
        K.values(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v.values()[row];
      }
    }
  }
  return K;
}

CoefficientField kernel_apply(const KernelMatrix& K, const CoefficientField& F) {
  const auto side = static_cast<std::size_t>(K.values.rows());
  if (F.values().size() != side || !(F.group() == K.group) || F.kind() != K.kind || F.labels() != K.labels) {
    throw Error(Errc::shape_mismatch, "coefficient field does not match the kernel");
  }
  Eigen::VectorXcd weighted(static_cast<Eigen::Index>(side));
  for (std::size_t i = 0; i < side; ++i) weighted(static_cast<Eigen::Index>(i)) = F.values()[i] * K.weights[i];
  const Eigen::VectorXcd out = K.values * weighted;
  CoefficientField R = F;
  for (std::size_t i = 0; i < side; ++i) R.values()[i] = out(static_cast<Eigen::Index>(i));
  return R;
}

AtomSystem atom_system(const WindowFamily& family) {
  const std::size_t n = family.group().order();
  if (n > kDenseOrderLimit) throw Error(Errc::size_guard, "group too large for a dense atom system");
  const std::size_t count = n * family.size();
  AtomSystem sys{Eigen::MatrixXcd(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(count)),
                 std::vector<double>(count)};
  const double haar = family.point_weight();
  for (std::size_t c = 0; c < family.size(); ++c) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t k = c * n + x;
      sys.atoms.col(static_cast<Eigen::Index>(k)) = detail::to_eigen(atom(family, x, c));
      sys.weights[k] = haar * family.channels()[c].weight;
    }
  }
  return sys;
}

Eigen::MatrixXcd resolution_operator(const AtomSystem& psi, const AtomSystem& phi) {
  if (psi.atoms.rows() != phi.atoms.rows() || psi.atoms.cols() != phi.atoms.cols() || psi.weights != phi.weights) {
    throw Error(Errc::shape_mismatch, "atom systems are not paired");
  }
  Eigen::MatrixXcd weighted_phi = phi.atoms;
  for (Eigen::Index k = 0; k < weighted_phi.cols(); ++k) {
    weighted_phi.col(k) *= psi.weights[static_cast<std::size_t>(k)];
  }
  return weighted_phi * psi.atoms.adjoint();
}

EquivalenceSpec EquivalenceSpec::identity(std::size_t order, std::size_t atoms) {
  const auto n = static_cast<Eigen::Index>(order);
  return {Eigen::MatrixXcd::Identity(n, n), Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(atoms))};
}

EquivalenceSpec EquivalenceSpec::fourier(const Group& group, std::size_t atoms) {
  const std::size_t n = group.order();
  Eigen::MatrixXcd T(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t xi = 0; xi < n; ++xi) {
    for (std::size_t x = 0; x < n; ++x) {
      T(static_cast<Eigen::Index>(xi), static_cast<Eigen::Index>(x)) = scale * std::conj(character_eval(group, xi, x));
    }
  }
  return {std::move(T), Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(atoms))};
}

EquivalenceSpec EquivalenceSpec::phase_diagonal(Eigen::VectorXcd diagonal, std::size_t atoms) {
  return {diagonal.asDiagonal().toDenseMatrix(), Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(atoms))};
}

void EquivalenceSpec::validate(std::size_t order, std::size_t atoms) const {
  const auto n = static_cast<Eigen::Index>(order);
  if (unitary.rows() != n || unitary.cols() != n) throw Error(Errc::invalid_spec, "T has the wrong shape");
  if (phase.size() != static_cast<Eigen::Index>(atoms)) throw Error(Errc::invalid_spec, "tau has the wrong length");
  const double defect = (unitary.adjoint() * unitary - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > 1e-10) throw Error(Errc::invalid_spec, "T is not unitary (max |T*T - I| = " + std::to_string(defect) + ")");
  for (Eigen::Index k = 0; k < phase.size(); ++k) {
    if (std::abs(std::abs(phase(k)) - 1.0) > 1e-10) throw Error(Errc::invalid_spec, "tau is not unimodular");
  }
}

namespace {

bool dense_invertible(const Eigen::MatrixXcd& C, double rel_tol) {
  const Eigen::VectorXd s = Eigen::BDCSVD<Eigen::MatrixXcd>(C).singularValues();
  const double hi = s.maxCoeff();
  return hi > 0.0 && s.minCoeff() > rel_tol * hi;
}

AtomSystem transform(const AtomSystem& sys, const EquivalenceSpec& spec) {
  AtomSystem out{spec.unitary * sys.atoms, sys.weights};
  for (Eigen::Index k = 0; k < out.atoms.cols(); ++k) out.atoms.col(k) *= spec.phase(k);
  return out;
}

}  // namespace

TransportResult transport(const WindowFamily& psi, const WindowFamily& phi, const EquivalenceSpec& spec,
                          double rel_tol) {
  detail::require_compatible(psi, phi);
  const std::size_t n = psi.group().order();
  spec.validate(n, n * psi.size());

  const AtomSystem a = atom_system(psi);
  const AtomSystem b = atom_system(phi);
  TransportResult r;
  r.psi = transform(a, spec);
  r.phi = transform(b, spec);
  r.original = resolution_operator(a, b);
  r.transported = resolution_operator(r.psi, r.phi);
  const Eigen::MatrixXcd expected = spec.unitary * r.original * spec.unitary.adjoint();
  r.residual = (r.transported - expected).cwiseAbs().maxCoeff();
  r.original_invertible = dense_invertible(r.original, rel_tol);
  r.transported_invertible = dense_invertible(r.transported, rel_tol);
  return r;
}

}  // namespace cnsgt
