#include "lagrangelab/numeric.hpp"

#include "lagrangelab/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>

namespace lagrangelab {

namespace {

Eigen::MatrixXd to_eigen(const IntMatrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c).convert_to<double>();
  return e;
}

Eigen::VectorXd to_eigen(const RatVector& v) {
  Eigen::VectorXd e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e(i) = v[i].convert_to<double>();
  return e;
}

Eigen::VectorXd residual(const Eigen::MatrixXd& g, const Eigen::VectorXd& delta, const Eigen::VectorXd& u) {
  return g * u.cwiseProduct(u) - delta;
}

std::vector<std::complex<double>> psi_raw(const Eigen::MatrixXd& g, const Eigen::VectorXd& u,
                                          const Eigen::VectorXd& phi) {
  Eigen::VectorXd angle = g.transpose() * phi;
  std::vector<std::complex<double>> z(u.size());
  for (Eigen::Index j = 0; j < u.size(); ++j)
    z[j] = u(j) * std::polar(1.0, std::numbers::pi * angle(j));
  return z;
}

}  // namespace

double quadric_residual(const QuadricSystem& q, const std::vector<double>& u) {
  Eigen::VectorXd ue = Eigen::Map<const Eigen::VectorXd>(u.data(), static_cast<Eigen::Index>(u.size()));
  return residual(to_eigen(q.gamma), to_eigen(q.delta), ue).cwiseAbs().maxCoeff();
}

std::vector<double> sample_point(const QuadricSystem& q, std::uint64_t seed, double tol) {
  const Eigen::MatrixXd g = to_eigen(q.gamma);
  const Eigen::VectorXd delta = to_eigen(q.delta);
  const Eigen::Index n = g.cols();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXd u(n);
    for (Eigen::Index j = 0; j < n; ++j) u(j) = normal(rng);
    for (int it = 0; it < 200; ++it) {
      Eigen::VectorXd f = residual(g, delta, u);
      if (f.cwiseAbs().maxCoeff() < tol) {
        return std::vector<double>(u.data(), u.data() + n);
      }
      Eigen::MatrixXd j = 2.0 * g * u.asDiagonal();
      // Minimum-norm Gauss-Newton step.
      Eigen::VectorXd step = j.transpose() * (j * j.transpose()).ldlt().solve(f);
      if (!step.allFinite()) break;
      u -= step;
    }
  }
  fail(ErrorKind::Structural, "could not sample a point of the quadric intersection");
}

std::vector<std::complex<double>> evaluate_psi(const QuadricSystem& q, const LatticeData&,
                                               const std::vector<double>& u, const std::vector<double>& phi,
                                               double tol) {
  if (u.size() != q.variables() || phi.size() != q.equations())
    fail(ErrorKind::Input, "psi argument has the wrong length");
  if (quadric_residual(q, u) > tol) fail(ErrorKind::Input, "point is not on the quadric intersection");
  Eigen::VectorXd ue = Eigen::Map<const Eigen::VectorXd>(u.data(), static_cast<Eigen::Index>(u.size()));
  Eigen::VectorXd pe = Eigen::Map<const Eigen::VectorXd>(phi.data(), static_cast<Eigen::Index>(phi.size()));
  return psi_raw(to_eigen(q.gamma), ue, pe);
}

double lagrangian_residual(const QuadricSystem& q, const std::vector<double>& u, const std::vector<double>& phi,
                           std::uint64_t seed, int pairs) {
  const Eigen::MatrixXd g = to_eigen(q.gamma);
  const Eigen::Index n = g.cols();
  const Eigen::Index d = g.rows();
  Eigen::VectorXd ue = Eigen::Map<const Eigen::VectorXd>(u.data(), n);
  Eigen::VectorXd pe = Eigen::Map<const Eigen::VectorXd>(phi.data(), d);
  // T_u R is the kernel of J = 2 Gamma diag(u); project random vectors onto it.
  Eigen::MatrixXd j = 2.0 * g * ue.asDiagonal();
  Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n) - j.transpose() * (j * j.transpose()).ldlt().solve(j);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double h = 1e-5;
  auto tangent = [&]() {
    Eigen::VectorXd du(n), dphi(d);
    for (Eigen::Index i = 0; i < n; ++i) du(i) = normal(rng);
    for (Eigen::Index i = 0; i < d; ++i) dphi(i) = normal(rng);
    du = proj * du;
    auto plus = psi_raw(g, ue + h * du, pe + h * dphi);
    auto minus = psi_raw(g, ue - h * du, pe - h * dphi);
    std::vector<std::complex<double>> v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = (plus[i] - minus[i]) / (2 * h);
    return v;
  };
  double worst = 0;
  for (int p = 0; p < pairs; ++p) {
    auto v = tangent();
    auto w = tangent();
    double omega = 0, nv = 0, nw = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      omega += std::imag(std::conj(v[i]) * w[i]);
      nv += std::norm(v[i]);
      nw += std::norm(w[i]);
    }
    worst = std::max(worst, std::abs(omega) / std::sqrt(nv * nw));
  }
  return worst;
}

double liouville_loop_integral(const QuadricSystem& q, const LatticeData& l, const std::vector<double>& u,
                               std::size_t generator, int samples) {
  const Eigen::MatrixXd g = to_eigen(q.gamma);
  const Eigen::Index n = g.cols();
  const Eigen::Index d = g.rows();
  Eigen::VectorXd ue = Eigen::Map<const Eigen::VectorXd>(u.data(), n);
  Eigen::VectorXd eps(d);
  for (Eigen::Index r = 0; r < d; ++r) eps(r) = l.dual_basis(generator, r).convert_to<double>();
  const double h = 1e-6;
  auto point = [&](double s) { return psi_raw(g, ue, 2.0 * s * eps); };
  // Periodic trapezoid rule for (1/2) sum_j Im(conj(z_j) z_j').
  double total = 0;
  for (int k = 0; k < samples; ++k) {
    double s = static_cast<double>(k) / samples;
    auto z = point(s);
    auto zp = point(s + h);
    auto zm = point(s - h);
    double integrand = 0;
    for (Eigen::Index j = 0; j < n; ++j) integrand += std::imag(std::conj(z[j]) * (zp[j] - zm[j]) / (2 * h));
    total += 0.5 * integrand;
  }
  return total / samples;
}

NumericSummary numeric_check(const QuadricSystem& q, const LatticeData& l, std::uint64_t seed,
                             const Tolerances& tol) {
  NumericSummary s;
  std::vector<double> u = sample_point(q, seed);
  s.membership_residual = quadric_residual(q, u);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> angle(0.0, 2.0);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<double> phi(q.equations());
    for (auto& x : phi) x = angle(rng);
    (void)evaluate_psi(q, l, u, phi, tol.membership);
    s.lagrangian_residual = std::max(s.lagrangian_residual, lagrangian_residual(q, u, phi, rng()));
  }
  for (std::size_t i = 0; i < q.equations(); ++i) {
    double exact = 0;
    for (std::size_t r = 0; r < q.equations(); ++r)
      exact += (l.dual_basis(i, r) * q.delta[r]).convert_to<double>();
    exact *= std::numbers::pi;
    double got = liouville_loop_integral(q, l, u, i);
    double err = std::abs(got - exact) / std::max(std::abs(exact), 1e-300);
    if (exact == 0) err = std::abs(got);
    s.liouville_relative_error = std::max(s.liouville_relative_error, err);
  }
  s.ok = s.membership_residual <= tol.membership && s.lagrangian_residual <= tol.lagrangian &&
         s.liouville_relative_error <= tol.liouville;
  return s;
}

}  // namespace lagrangelab
