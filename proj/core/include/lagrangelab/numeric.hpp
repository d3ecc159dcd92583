#pragma once

#include "lagrangelab/lattice.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace lagrangelab {

// Floating-point checks of the immersion psi. Never used for verdicts.

struct Tolerances {
  double membership = 1e-9;
  double lagrangian = 1e-8;
  double liouville = 1e-6;
};

/// A point of R found by projected Gauss-Newton from a seeded random start.
[[nodiscard]] std::vector<double> sample_point(const QuadricSystem& q, std::uint64_t seed,
                                               double tol = 1e-12);

/// max_i |sum_j gamma_ij u_j^2 - delta_i|
[[nodiscard]] double quadric_residual(const QuadricSystem& q, const std::vector<double>& u);

/// psi(u, phi)_j = u_j exp(i pi <gamma_j, phi>). Throws ErrorKind::Input when
/// the quadric residual of u exceeds tol.
[[nodiscard]] std::vector<std::complex<double>> evaluate_psi(const QuadricSystem& q, const LatticeData& l,
                                                             const std::vector<double>& u,
                                                             const std::vector<double>& phi,
                                                             double tol = 1e-9);

/// Largest |omega(V, W)| / (|V| |W|) over random tangent pairs at psi(u, phi).
[[nodiscard]] double lagrangian_residual(const QuadricSystem& q, const std::vector<double>& u,
                                         const std::vector<double>& phi, std::uint64_t seed,
                                         int pairs = 16);

/// Integral of the Liouville form along s -> psi(u, 2 s epsilon_i), s in [0, 1].
[[nodiscard]] double liouville_loop_integral(const QuadricSystem& q, const LatticeData& l,
                                             const std::vector<double>& u, std::size_t generator,
                                             int samples = 4096);

struct NumericSummary {
  double membership_residual = 0;
  double lagrangian_residual = 0;
  double liouville_relative_error = 0;
  bool ok = false;
};

/// Samples a point, checks membership, the Lagrangian condition at a few
/// random angles and the Liouville loop integrals against pi <epsilon_i, delta>.
[[nodiscard]] NumericSummary numeric_check(const QuadricSystem& q, const LatticeData& l,
                                           std::uint64_t seed, const Tolerances& tol = {});

}  // namespace lagrangelab
