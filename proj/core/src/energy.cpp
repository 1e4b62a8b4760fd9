#include "tsmm/energy.hpp"

#include <cmath>
#include <limits>

namespace tsmm {

namespace {

class DoubleWell final : public EnergyModel {
public:
  DoubleWell() : EnergyModel(1) {}
  std::string name() const override { return "double_well"; }
  double value(const Vec& x) const override {
    const double s = x[0] * x[0] - 1.0;
    return s * s;
  }
  Vec gradient(const Vec& x) const override {
    Vec g(1);
    g[0] = 4.0 * x[0] * (x[0] * x[0] - 1.0);
    return g;
  }
  bool is_admissible(const Vec&) const override { return true; }
  double min_energy() const override { return 0.0; }
  double noncvx_constant(double K) const override { return noncvx_constant_double_well(K).C; }
  bool has_hessian() const override { return true; }
  Mat hessian(const Vec& x) const override {
    Mat h(1, 1);
    h(0, 0) = 12.0 * x[0] * x[0] - 4.0;
    return h;
  }
};

class Quadratic final : public EnergyModel {
public:
  explicit Quadratic(double omega) : EnergyModel(1), omega_(omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("quadratic: omega must be positive");
  }
  std::string name() const override { return "quadratic"; }
  double value(const Vec& x) const override { return 0.5 * omega_ * x[0] * x[0]; }
  Vec gradient(const Vec& x) const override {
    Vec g(1);
    g[0] = omega_ * x[0];
    return g;
  }
  bool is_admissible(const Vec&) const override { return true; }
  double min_energy() const override { return 0.0; }
  double noncvx_constant(double) const override { return 0.0; }
  bool has_hessian() const override { return true; }
  Mat hessian(const Vec&) const override {
    Mat h(1, 1);
    h(0, 0) = omega_;
    return h;
  }

private:
  double omega_;
};

}  // namespace

EnergyModelPtr double_well() { return std::make_shared<DoubleWell>(); }

EnergyModelPtr quadratic(double omega) { return std::make_shared<Quadratic>(omega); }

SublevelBound noncvx_constant_double_well(double K) {
  if (K < 0.0) throw std::invalid_argument("noncvx_constant_double_well: K must be >= 0");
  const double xmax_sq = 1.0 + std::sqrt(K);
  const double C = 0.5 * std::max(4.0, 12.0 * xmax_sq - 4.0);
  return SublevelBound{K, C};
}

double check_gradient(const EnergyModel& model, const Vec& x, double eps) {
  const Vec g = model.gradient(x);
  double worst = 0.0;
  Vec probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + eps;
    const double fp = model.value(probe);
    probe[i] = x[i] - eps;
    const double fm = model.value(probe);
    probe[i] = x[i];
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw std::domain_error("check_gradient: probe point left the finite-energy domain");
    const double cd = (fp - fm) / (2.0 * eps);
    worst = std::max(worst, std::abs(cd - g[i]) / (1.0 + std::abs(g[i])));
  }
  return worst;
}

}  // namespace tsmm
