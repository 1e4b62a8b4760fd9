#include "tsmm/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsmm {

namespace {

double eval_local(const std::vector<double>& c, double u) {
  double v = 0.0;
  for (std::size_t j = c.size(); j-- > 0;) v = v * u + c[j];
  return v;
}

std::vector<double> antider_local(const std::vector<double>& c, double constant) {
  std::vector<double> out(c.size() + 1);
  out[0] = constant;
  for (std::size_t j = 0; j < c.size(); ++j) out[j + 1] = c[j] / (j + 1.0);
  return out;
}

}  // namespace

PiecewisePoly::PiecewisePoly(std::vector<double> breaks, std::vector<std::vector<double>> coeffs,
                             std::vector<double> tail)
    : breaks_(std::move(breaks)), coeffs_(std::move(coeffs)), tail_(std::move(tail)) {
  if (breaks_.size() != coeffs_.size() + 1)
    throw std::invalid_argument("PiecewisePoly: need one more break than pieces");
  if (!std::is_sorted(breaks_.begin(), breaks_.end()))
    throw std::invalid_argument("PiecewisePoly: breaks must be sorted");
}

double PiecewisePoly::eval(double t) const {
  if (breaks_.empty() || t < breaks_.front()) return 0.0;
  if (t >= breaks_.back()) return eval_local(tail_, t - breaks_.back());
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - breaks_.begin()) - 1;
  return eval_local(coeffs_[i], t - breaks_[i]);
}

PiecewisePoly PiecewisePoly::antiderivative() const {
  std::vector<std::vector<double>> out(coeffs_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = antider_local(coeffs_[i], acc);
    acc = eval_local(out[i], breaks_[i + 1] - breaks_[i]);
  }
  return PiecewisePoly(breaks_, std::move(out), antider_local(tail_, acc));
}

double PiecewisePoly::integral_of_square() const {
  for (double c : tail_)
    if (c != 0.0) throw std::logic_error("integral_of_square: unbounded tail");
  double total = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    std::vector<double> sq(2 * c.size() > 0 ? 2 * c.size() - 1 : 0, 0.0);
    for (std::size_t p = 0; p < c.size(); ++p)
      for (std::size_t r = 0; r < c.size(); ++r) sq[p + r] += c[p] * c[r];
    const auto F = antider_local(sq, 0.0);
    total += eval_local(F, breaks_[i + 1] - breaks_[i]);
  }
  return total;
}

Forcing Forcing::zero(Eigen::Index dim, double T) {
  Forcing f;
  f.kind_ = Kind::Zero;
  f.dim_ = dim;
  f.horizon_ = T;
  return f;
}

Forcing Forcing::constant(const Vec& value, double T) {
  std::vector<Vec> coeffs{value};
  return polynomial(coeffs, T);
}

Forcing Forcing::polynomial(const std::vector<Vec>& coeffs, double T) {
  if (coeffs.empty()) throw std::invalid_argument("Forcing::polynomial: empty coefficients");
  const Eigen::Index dim = coeffs.front().size();
  std::vector<std::vector<Vec>> piece{coeffs};
  return piecewise_polynomial(dim, {0.0, T}, std::move(piece), T);
}

Forcing Forcing::piecewise_polynomial(Eigen::Index dim, std::vector<double> breaks,
                                      std::vector<std::vector<Vec>> coeffs, double T) {
  if (breaks.size() < 2 || breaks.front() < -1e-12 || breaks.back() > T + 1e-12)
    throw std::invalid_argument("Forcing: breaks must span a sub-range of [0, T]");
  if (coeffs.size() + 1 != breaks.size())
    throw std::invalid_argument("Forcing: need one coefficient set per piece");
  Forcing f;
  f.kind_ = Kind::Poly;
  f.dim_ = dim;
  f.horizon_ = T;
  f.components_.reserve(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    std::vector<std::vector<double>> comp(coeffs.size());
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
      comp[p].resize(coeffs[p].size());
      for (std::size_t j = 0; j < coeffs[p].size(); ++j) {
        if (coeffs[p][j].size() != dim)
          throw std::invalid_argument("Forcing: inconsistent component dimension");
        comp[p][j] = coeffs[p][j][c];
      }
    }
    f.components_.emplace_back(breaks, std::move(comp));
    f.double_antider_.push_back(f.components_.back().antiderivative().antiderivative());
  }
  return f;
}

Forcing Forcing::callable(std::function<Vec(double)> fn, Eigen::Index dim, double T) {
  Forcing f;
  f.kind_ = Kind::Callable;
  f.dim_ = dim;
  f.horizon_ = T;
  f.fn_ = std::move(fn);
  return f;
}

Vec Forcing::eval(double t) const {
  if (kind_ == Kind::Zero || t < 0.0 || t > horizon_) return Vec::Zero(dim_);
  if (kind_ == Kind::Poly) {
    Vec out(dim_);
    for (Eigen::Index c = 0; c < dim_; ++c) out[c] = components_[c].eval(t);
    return out;
  }
  return fn_(t);
}

Vec Forcing::window_average(int k, int l, double tau, double h) const {
  if (k < 1 || l < 0) throw std::invalid_argument("window_average: need k >= 1 and l >= 0");
  if (!(tau > 0.0 && h > 0.0)) throw std::invalid_argument("window_average: need tau, h > 0");
  const double t0 = (l - 1.0) * h + (k - 1.0) * tau;
  if (kind_ == Kind::Zero) return Vec::Zero(dim_);

  if (kind_ == Kind::Poly) {
    // (G(t0+tau+h) - G(t0+h) - G(t0+tau) + G(t0)) / (tau*h), G the double antiderivative.
    Vec out(dim_);
    for (Eigen::Index c = 0; c < dim_; ++c) {
      const auto& G = double_antider_[c];
      out[c] = (G.eval(t0 + tau + h) - G.eval(t0 + h) - G.eval(t0 + tau) + G.eval(t0)) / (tau * h);
    }
    return out;
  }

  // 2-point Gauss-Legendre per axis on the support-clipped limits.
  static const double node = 1.0 / std::sqrt(3.0);
  Vec acc = Vec::Zero(dim_);
  for (int a = 0; a < 2; ++a) {
    const double sigma = 0.5 * tau * (1.0 + (a == 0 ? -node : node));
    const double lo = std::max(0.0, -(t0 + sigma));
    const double hi = std::min(h, horizon_ - (t0 + sigma));
    if (hi <= lo) continue;
    Vec inner = Vec::Zero(dim_);
    for (int b = 0; b < 2; ++b) {
      const double s = 0.5 * (lo + hi) + 0.5 * (hi - lo) * (b == 0 ? -node : node);
      inner += fn_(t0 + sigma + s);
    }
    acc += inner * 0.5 * (hi - lo);
  }
  return acc * (0.5 * tau) / (tau * h);
}

double Forcing::l2_norm_sq() const {
  if (kind_ == Kind::Zero) return 0.0;
  if (kind_ == Kind::Poly) {
    double total = 0.0;
    for (const auto& comp : components_) total += comp.integral_of_square();
    return total;
  }
  // composite Simpson on [0, T]
  const int n = 4096;
  const double dt = horizon_ / n;
  double total = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    total += w * fn_(i * dt).squaredNorm();
  }
  return total * dt / 3.0;
}

}  // namespace tsmm
