#pragma once

#include "tsmm/energy.hpp"

#include <functional>
#include <vector>

namespace tsmm {

/// Piecewise polynomial on the real line: zero before breaks.front(), the
/// polynomial coeffs[i] (ascending powers, in the local coordinate
/// t - breaks[i]) on [breaks[i], breaks[i+1]), and a tail polynomial (local
/// coordinate t - breaks.back()) from breaks.back() on. Forcings have a zero
/// tail; antiderivatives grow a constant/linear tail.
class PiecewisePoly {
public:
  PiecewisePoly() = default;
  PiecewisePoly(std::vector<double> breaks, std::vector<std::vector<double>> coeffs,
                std::vector<double> tail = {});

  double eval(double t) const;
  /// Antiderivative F with F == 0 before the support.
  PiecewisePoly antiderivative() const;
  /// Integral of the square over the whole line; requires a zero tail.
  double integral_of_square() const;

  const std::vector<double>& breaks() const { return breaks_; }

private:
  std::vector<double> breaks_;
  std::vector<std::vector<double>> coeffs_;
  std::vector<double> tail_;
};

/// Time-dependent right-hand side on [0, T], extended by zero outside.
/// Polynomial kinds evaluate their window averages in closed form; the
/// callable kind uses 2-point Gauss-Legendre per axis with the integration
/// limits clipped to the support.
class Forcing {
public:
  static Forcing zero(Eigen::Index dim, double T);
  static Forcing constant(const Vec& value, double T);
  /// f(t) = sum_j coeffs[j] * t^j on [0, T].
  static Forcing polynomial(const std::vector<Vec>& coeffs, double T);
  /// Per-piece polynomial: on [breaks[i], breaks[i+1]) the component c equals
  /// sum_j coeffs[i][j][c] * (t - breaks[i])^j. Breaks must lie in [0, T].
  static Forcing piecewise_polynomial(Eigen::Index dim, std::vector<double> breaks,
                                      std::vector<std::vector<Vec>> coeffs, double T);
  static Forcing callable(std::function<Vec(double)> f, Eigen::Index dim, double T);

  Eigen::Index dim() const { return dim_; }
  double horizon() const { return horizon_; }
  bool is_zero() const { return kind_ == Kind::Zero; }

  /// Value at time t; zero outside [0, T].
  Vec eval(double t) const;

  /// (1/(tau*h)) * int_0^tau int_0^h f(t0 + s + sigma) ds dsigma with
  /// t0 = (l-1)*h + (k-1)*tau. Requires k >= 1, l >= 0.
  Vec window_average(int k, int l, double tau, double h) const;

  /// int_0^T |f(t)|_H^2 dt with the plain Euclidean norm in the components
  /// (weights enter at the call sites that need them). Exact for polynomial
  /// kinds, composite Simpson for the callable kind.
  double l2_norm_sq() const;

private:
  enum class Kind { Zero, Poly, Callable };

  Forcing() = default;

  Kind kind_ = Kind::Zero;
  Eigen::Index dim_ = 0;
  double horizon_ = 0.0;
  std::vector<PiecewisePoly> components_;         // Poly kind
  std::vector<PiecewisePoly> double_antider_;     // cached G = antider(antider(f))
  std::function<Vec(double)> fn_;                 // Callable kind
};

/// Spec surface for the double window average of the forcing.
inline Vec average_forcing(const Forcing& f, int k, int l, double tau, double h) {
  return f.window_average(k, l, tau, h);
}

}  // namespace tsmm
