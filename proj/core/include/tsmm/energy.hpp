#pragma once

#include <Eigen/Dense>

#include <memory>
#include <stdexcept>
#include <string>

namespace tsmm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Energy sublevel K together with a semiconvexity constant C valid on it:
/// for admissible x, y with value <= K,
///   <grad(y), y - x>  >=  value(y) - value(x) - C * ||y - x||_H^2.
struct SublevelBound {
  double K = 0.0;
  double C = 0.0;
};

/// An energy on R^m: extended-real value (+infinity outside the admissible
/// set), its exact gradient, the H-inner-product weights used for kinetic
/// terms, and a certified semiconvexity constant per sublevel.
///
/// Instances are immutable after construction; evaluation is reentrant.
class EnergyModel {
public:
  explicit EnergyModel(Eigen::Index dim) : weights_(Vec::Ones(dim)) {}
  virtual ~EnergyModel() = default;

  virtual std::string name() const = 0;
  Eigen::Index dim() const { return weights_.size(); }

  /// Energy value; +infinity encodes an inadmissible state.
  virtual double value(const Vec& x) const = 0;
  /// Exact derivative of value; only called where value is finite.
  virtual Vec gradient(const Vec& x) const = 0;
  virtual bool is_admissible(const Vec& x) const = 0;
  virtual double min_energy() const = 0;
  /// Closed-form semiconvexity constant C(K), nondecreasing in K.
  virtual double noncvx_constant(double K) const = 0;

  /// H-inner-product weights (all ones for ODE models, cell size for meshes).
  const Vec& weights() const { return weights_; }

  virtual bool has_hessian() const { return false; }
  virtual Mat hessian(const Vec&) const {
    throw std::logic_error("EnergyModel: no hessian available");
  }

  /// Quadratic dissipation seminorm R(v) = v' A v and its operator v -> A v,
  /// present only for models with a spatial regularizer.
  virtual bool has_regularizer() const { return false; }
  virtual Vec regularizer_apply(const Vec&) const {
    throw std::logic_error("EnergyModel: no regularizer available");
  }
  double regularizer_quadratic(const Vec& v) const { return v.dot(regularizer_apply(v)); }

  double inner_h(const Vec& u, const Vec& v) const { return (weights_.array() * u.array() * v.array()).sum(); }
  double norm_h_sq(const Vec& u) const { return inner_h(u, u); }
  double norm_h(const Vec& u) const { return std::sqrt(norm_h_sq(u)); }

protected:
  Vec weights_;
};

using EnergyModelPtr = std::shared_ptr<const EnergyModel>;

/// Scalar double-well (x^2 - 1)^2 with minima at +-1; admissible everywhere.
EnergyModelPtr double_well();

/// Scalar convex energy omega * x^2 / 2 (omega > 0); C(K) = 0.
EnergyModelPtr quadratic(double omega);

/// Semiconvexity constant of the double well on the sublevel {E <= K}:
/// the sublevel hull is |x| <= sqrt(1 + sqrt(K)), and
/// C = max(4, 12*(1 + sqrt(K)) - 4) / 2 = half the largest |E''| there.
/// Throws std::invalid_argument for K < 0.
SublevelBound noncvx_constant_double_well(double K);

/// Max over coordinates of |central difference - gradient| / (1 + |gradient|)
/// at step eps. Throws std::domain_error if a probe point is inadmissible.
double check_gradient(const EnergyModel& model, const Vec& x, double eps);

}  // namespace tsmm
