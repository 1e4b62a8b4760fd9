#pragma once

#include "tsmm/energy.hpp"

namespace tsmm {

enum class RegularizerKind { Linear, Nonlinear };

/// Uniform 1D mesh on (0, L) for a compressible elastic bar clamped at the
/// left end (node 0 carries the fixed value 0 and is eliminated; the right
/// end is free). Node i = 1..m sits at x_i = i*dx, dx = L/m.
///
/// Cell energy density: e(xi) = xi^{-a} + (svk_coeff/8)*(xi^2-1)^2 for
/// xi > 0, +infinity otherwise. Curvature regularizer on interior nodes:
/// either (dx/2)*sum |D2|^2 or (dx/q)*sum (1+|D2|)^{q-2}|D2|^2.
struct BarMesh {
  int m = 32;                 // degrees of freedom (interior + right node)
  double length = 1.0;        // L
  double a = 2.0;             // compression exponent, >= 2
  double svk_coeff = 0.0;     // Saint Venant-Kirchhoff weight, >= 0
  RegularizerKind reg_kind = RegularizerKind::Linear;
  double q = 3.0;             // nonlinear regularizer exponent, > 1

  double dx() const { return length / m; }
  /// Throws std::invalid_argument when a parameter is out of range.
  void validate() const;
};

/// Nodal values of the identity deformation eta_i = x_i.
Vec bar_identity_state(const BarMesh& mesh);

/// Discrete energy; +infinity when some cell gradient is <= 0.
double bar_energy(const BarMesh& mesh, const Vec& eta);

/// Exact derivative of bar_energy with respect to the nodal values.
/// Throws std::domain_error for inadmissible states.
Vec bar_gradient(const BarMesh& mesh, const Vec& eta);

/// Certified quantities for the sublevel {E <= K}: every cell gradient obeys
/// xi >= eps0(K) = (dx/K)^{1/a}, and with svk_coeff > 0 additionally
/// xi <= xi_max(K) = sqrt(1 + sqrt(8K/(svk_coeff*dx))).
double bar_eps0(const BarMesh& mesh, double K);
/// Upper bound on |e''| over [eps0(K), xi_max(K)].
double bar_density_hessian_bound(const BarMesh& mesh, double K);

/// Wraps the bar as an EnergyModel with H-weights dx (discrete L^2) and
/// noncvx_constant(K) = 2 * bar_density_hessian_bound(K) / dx^2
/// (density bound halved, then the inverse estimate
/// ||grad w||^2 <= (4/dx^2)||w||^2 converts gradients to values).
EnergyModelPtr bar_model(const BarMesh& mesh);

}  // namespace tsmm
