#include <doctest.h>

#include <Eigen/SVD>

#include "cnsgt/awh/spectral_window.hpp"
#include "cnsgt/awh/warp.hpp"
#include "cnsgt/awh/warped_symbol.hpp"
#include "cnsgt/error.hpp"
#include "cnsgt/frame_analysis.hpp"
#include "oracles.hpp"

using namespace cnsgt;

namespace {

bool throws_code(Errc code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

Signal from_spectrum(const Group& g, ComplexVector spec) {
  return fourier(Signal(g, Side::spectral, std::move(spec)), Direction::inverse);
}

WindowFamily single(const Signal& w, double weight = 1.0) {
  return WindowFamily(w.group(), SystemKind::translation, {Channel{"a", w, weight}});
}

WindowFamily scaled(const WindowFamily& f, double c) {
  std::vector<Channel> ch;
  for (const auto& x : f.channels()) {
    Signal w = x.window;
    for (auto& v : w.values()) v *= c;
    ch.push_back({x.label, w, x.weight});
  }
  return WindowFamily(f.group(), f.kind(), ch);
}

/// The composite-warp pair sampled on Z_n: one channel per quadrature node
/// omega_k with spectra psi^(beta(omega_k)(xi - omega_k)) on a frequency
/// grid over [-3, 3] and weights w_k |beta|.
std::pair<WindowFamily, WindowFamily> composite_at_finite_resolution(std::size_t n, std::size_t nodes) {
  const Group g({n});
  auto [psi_hat, phi_hat] = awh::composite_pair();
  const auto warp = awh::WarpSpec::composite(1.0);
  awh::QuadratureSpec q;
  q.domain = awh::QuadratureDomain::whole_line;
  q.n_nodes = nodes;
  const auto om = awh::omega_nodes(q, {}, false);
  auto xi_of = [&](std::size_t k) { return -3.0 + 6.0 * static_cast<double>(k) / static_cast<double>(n - 1); };
  std::vector<Channel> a, b;
  for (std::size_t j = 0; j < om.omega.size(); ++j) {
    const double beta = warp.beta(om.omega[j]);
    const double eta = warp.eta(om.omega[j]);
    ComplexVector sa(n), sb(n);
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
      const double z = beta * (xi_of(k) - eta);
      sa[k] = psi_hat(z);
      sb[k] = phi_hat(z);
      any = any || sa[k] != Complex{} || sb[k] != Complex{};
    }
    if (!any) continue;
    const double w = om.weight[j] * std::abs(beta);
    const std::string label = "w" + std::to_string(j);
    a.push_back({label, from_spectrum(g, sa), w});
    b.push_back({label, from_spectrum(g, sb), w});
  }
  return {WindowFamily(g, SystemKind::translation, a), WindowFamily(g, SystemKind::translation, b)};
}

}  // namespace

TEST_SUITE("frame_analysis") {
  TEST_CASE("assess: delta window is a tight frame with A = B = 1") {
    const Group g({8});
    const auto r = assess(single(Signal::delta(g, 0)));
    CHECK(r.kind == FrameKind::frame);
    CHECK(r.lower == doctest::Approx(1.0));
    CHECK(r.upper == doctest::Approx(1.0));
    CHECK(r.tight);
    CHECK(r.cross_bound >= r.symbol_max_abs);
  }

  TEST_CASE("assess: a spectral zero gives bessel_only; a non-vanishing cross symbol a reproducing pair") {
    const Group g({8});
    ComplexVector s(8, 1.0);
    s[3] = 0.0;
    const auto r = assess(single(from_spectrum(g, s)));
    CHECK(r.kind == FrameKind::bessel_only);
    CHECK(r.lower <= 1e-15);
    CHECK_FALSE(r.tight);

    oracle::Rng rng(30);
    const auto psi = oracle::random_family(g, SystemKind::translation, 3, rng);
    const auto phi = oracle::partner(psi, rng);
    const auto rp = assess(psi, phi);
    CHECK(rp.kind == FrameKind::reproducing_pair);
    CHECK(rp.lower <= rp.upper);
    CHECK(rp.cross_bound >= rp.symbol_max_abs * (1 - 1e-12));

    const auto bad = single(from_spectrum(g, s));
    const auto other = single(Signal::delta(g, 0));
    CHECK(assess(bad, other).kind == FrameKind::not_reproducing);
  }

  TEST_CASE("assess: composite pair at finite resolution has A = 2, B = 3") {
    const auto [psi, phi] = composite_at_finite_resolution(61, 4001);
    const auto r = assess(psi, phi);
    CHECK(r.kind == FrameKind::reproducing_pair);
    CHECK(r.lower == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(r.upper == doctest::Approx(3.0).epsilon(1e-4));
  }

  TEST_CASE("assess is scale covariant; tight frames invert by 1/A") {
    oracle::Rng rng(31);
    const Group g({16});
    const auto psi = oracle::random_family(g, SystemKind::translation, 2, rng);
    const auto phi = oracle::partner(psi, rng);
    const auto r1 = assess(psi, phi);
    const auto r2 = assess(psi, scaled(phi, 2.5));
    CHECK(r2.kind == r1.kind);
    CHECK(r2.lower == doctest::Approx(2.5 * r1.lower).epsilon(1e-12));
    CHECK(r2.upper == doctest::Approx(2.5 * r1.upper).epsilon(1e-12));
    CHECK(r2.cross_bound == doctest::Approx(2.5 * r1.cross_bound).epsilon(1e-12));

    const auto t = single(Signal::delta(g, 2), 3.0);
    const auto rt = assess(t);
    CHECK(rt.tight);
    const auto f = oracle::random_signal(g, rng);
    const auto inv = multiplier_invert(f, fourier_symbol(t, t));
    for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(inv[i] - f[i] / rt.lower) <= 1e-14);
    CHECK(assess(psi, psi).kind == FrameKind::frame);
  }

  TEST_CASE("reproducing kernel: delta channel is the identity pairing") {
    const Group g({6});
    const auto d = single(Signal::delta(g, 0));
    const auto K = reproducing_kernel(d, d);
    CHECK((K.values - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-14);
    const auto zero = kernel_apply(K, CoefficientField::zeros(d));
    for (const auto& v : zero.values()) CHECK(v == Complex{});
  }

  TEST_CASE("reproducing kernel reproduces the range for 20 random pairs on Z10") {
    oracle::Rng rng(32);
    const Group g({10});
    double worst = 0.0;
    for (int p = 0; p < 20; ++p) {
      const auto kind = p % 2 ? SystemKind::character : SystemKind::translation;
      const auto psi = oracle::random_family(g, kind, 2, rng);
      const auto phi = oracle::partner(psi, rng);
      const auto K = reproducing_kernel(psi, phi);
      for (int t = 0; t < 50; ++t) {
        const auto F = analyze(oracle::random_signal(g, rng), psi);
        worst = std::max(worst, oracle::rel_diff(kernel_apply(K, F).values(), F.values()));
      }
    }
    CHECK(worst <= 1e-9);
  }

  TEST_CASE("frame kernel is an idempotent orthogonal projection onto the range") {
    oracle::Rng rng(33);
    const Group g({8});
    const auto psi = oracle::random_family(g, SystemKind::translation, 3, rng);
    const auto K = reproducing_kernel(psi, psi);
    auto F = CoefficientField::zeros(psi);
    F.values() = oracle::random_vector(F.values().size(), rng);
    const auto RF = kernel_apply(K, F);
    CHECK(oracle::rel_diff(kernel_apply(K, RF).values(), RF.values()) <= 1e-9);

    // Orthogonal projector onto span of analysis vectors in the weighted space.
    const std::size_t N = F.values().size();
    Eigen::MatrixXcd A(N, 8);
    for (std::size_t x = 0; x < 8; ++x) {
      const auto col = analyze(Signal::delta(g, x), psi).values();
      for (std::size_t i = 0; i < N; ++i) A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(x)) = col[i];
    }
    Eigen::VectorXd sw(N);
    for (std::size_t i = 0; i < N; ++i) sw[static_cast<Eigen::Index>(i)] = std::sqrt(F.measure(i));
    const Eigen::MatrixXcd B = sw.asDiagonal() * A;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(B, Eigen::ComputeThinU);
    const Eigen::MatrixXcd U = svd.matrixU();
    Eigen::VectorXcd fv(N);
    for (std::size_t i = 0; i < N; ++i) fv[static_cast<Eigen::Index>(i)] = F.values()[i] * sw[static_cast<Eigen::Index>(i)];
    const Eigen::VectorXcd proj = U * (U.adjoint() * fv);
    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      err = std::max(err, std::abs(RF.values()[i] * sw[static_cast<Eigen::Index>(i)] - proj[static_cast<Eigen::Index>(i)]));
    }
    CHECK(err <= 1e-9);
    CHECK(norm_squared(RF) < norm_squared(F));
  }

  TEST_CASE("kernel_apply rejects mismatched shapes; kernel needs an invertible symbol") {
    oracle::Rng rng(34);
    const Group g({6});
    const auto psi = oracle::random_family(g, SystemKind::translation, 2, rng);
    const auto K = reproducing_kernel(psi, psi);
    const auto other = oracle::random_family(g, SystemKind::translation, 3, rng);
    CHECK(throws_code(Errc::shape_mismatch, [&] { kernel_apply(K, CoefficientField::zeros(other)); }));
    ComplexVector s(6, 1.0);
    s[0] = 0.0;
    const auto bad = single(from_spectrum(g, s));
    CHECK(throws_code(Errc::not_invertible, [&] { reproducing_kernel(bad, bad); }));
  }

  TEST_CASE("transport: identity, phases and the Fourier matrix") {
    oracle::Rng rng(35);
    const Group g({8});
    const auto psi = oracle::random_family(g, SystemKind::translation, 2, rng);
    const auto phi = oracle::partner(psi, rng);
    const std::size_t atoms = 16;

    const auto id = transport(psi, phi, EquivalenceSpec::identity(8, atoms));
    CHECK((id.transported - id.original).cwiseAbs().maxCoeff() <= 1e-12);

    EquivalenceSpec phases = EquivalenceSpec::identity(8, atoms);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    for (auto& t : phases.phase) t = std::polar(1.0, ang(rng));
    const auto ph = transport(psi, phi, phases);
    CHECK((ph.transported - ph.original).cwiseAbs().maxCoeff() <= 1e-12);

    const auto fr = transport(psi, phi, EquivalenceSpec::fourier(g, atoms));
    const Eigen::MatrixXcd T = EquivalenceSpec::fourier(g, atoms).unitary;
    CHECK((fr.transported - T * fr.original * T.adjoint()).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(fr.residual <= 1e-9);
    CHECK(fr.verdict_preserved());
    CHECK(fr.original_invertible);

    Eigen::VectorXcd d(8);
    for (auto& x : d) x = std::polar(1.0, ang(rng));
    const auto dg = transport(psi, phi, EquivalenceSpec::phase_diagonal(d, atoms));
    CHECK(dg.residual <= 1e-9);
    CHECK(dg.verdict_preserved());

    ComplexVector s(8, 1.0);
    s[2] = 0.0;
    const auto bad = single(from_spectrum(g, s));
    const auto nb = transport(bad, bad, EquivalenceSpec::fourier(g, 8));
    CHECK_FALSE(nb.original_invertible);
    CHECK(nb.verdict_preserved());
  }

  TEST_CASE("transport rejects non-unitary T and non-unimodular phases") {
    oracle::Rng rng(36);
    const Group g({4});
    const auto psi = oracle::random_family(g, SystemKind::translation, 1, rng);
    EquivalenceSpec s = EquivalenceSpec::identity(4, 4);
    s.unitary(0, 0) = 2.0;
    CHECK(throws_code(Errc::invalid_spec, [&] { transport(psi, psi, s); }));
    EquivalenceSpec p = EquivalenceSpec::identity(4, 4);
    p.phase[1] = 0.5;
    CHECK(throws_code(Errc::invalid_spec, [&] { transport(psi, psi, p); }));
  }
}
