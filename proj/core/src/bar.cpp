#include "tsmm/bar.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tsmm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Cell gradients xi_i = (eta_i - eta_{i-1})/dx with eta_0 = 0, i = 1..m.
void cell_gradients(const BarMesh& mesh, const Vec& eta, Vec& xi) {
  const double dx = mesh.dx();
  xi.resize(mesh.m);
  double prev = 0.0;
  for (int i = 0; i < mesh.m; ++i) {
    xi[i] = (eta[i] - prev) / dx;
    prev = eta[i];
  }
}

// Second differences s_i = (eta_{i+1} - 2 eta_i + eta_{i-1})/dx^2 at interior
// nodes i = 1..m-1 (eta_0 = 0).
void second_differences(const BarMesh& mesh, const Vec& eta, Vec& s) {
  const double dx2 = mesh.dx() * mesh.dx();
  s.resize(std::max(mesh.m - 1, 0));
  for (int i = 1; i < mesh.m; ++i) {
    const double left = (i == 1) ? 0.0 : eta[i - 2];
    s[i - 1] = (eta[i] - 2.0 * eta[i - 1] + left) / dx2;
  }
}

double density(const BarMesh& mesh, double xi) {
  const double comp = std::pow(xi, -mesh.a);
  const double s = xi * xi - 1.0;
  return comp + mesh.svk_coeff / 8.0 * s * s;
}

double density_d1(const BarMesh& mesh, double xi) {
  return -mesh.a * std::pow(xi, -(mesh.a + 1.0)) + 0.5 * mesh.svk_coeff * xi * (xi * xi - 1.0);
}

double density_d2(const BarMesh& mesh, double xi) {
  return mesh.a * (mesh.a + 1.0) * std::pow(xi, -(mesh.a + 2.0)) +
         0.5 * mesh.svk_coeff * (3.0 * xi * xi - 1.0);
}

// Regularizer node density psi(s), psi', psi''.
double reg_psi(const BarMesh& mesh, double s) {
  if (mesh.reg_kind == RegularizerKind::Linear) return 0.5 * s * s;
  const double q = mesh.q;
  return std::pow(1.0 + std::abs(s), q - 2.0) * s * s / q;
}

double reg_psi_d1(const BarMesh& mesh, double s) {
  if (mesh.reg_kind == RegularizerKind::Linear) return s;
  const double q = mesh.q;
  const double w = 1.0 + std::abs(s);
  const double sgn = (s > 0.0) - (s < 0.0);
  return ((q - 2.0) * std::pow(w, q - 3.0) * sgn * s * s + 2.0 * std::pow(w, q - 2.0) * s) / q;
}

double reg_psi_d2(const BarMesh& mesh, double s) {
  if (mesh.reg_kind == RegularizerKind::Linear) return 1.0;
  const double q = mesh.q;
  const double w = 1.0 + std::abs(s);
  return ((q - 2.0) * (q - 3.0) * std::pow(w, q - 4.0) * s * s +
          4.0 * (q - 2.0) * std::pow(w, q - 3.0) * std::abs(s) + 2.0 * std::pow(w, q - 2.0)) /
         q;
}

class BarModel final : public EnergyModel {
public:
  explicit BarModel(const BarMesh& mesh) : EnergyModel(mesh.m), mesh_(mesh) {
    mesh.validate();
    weights_ = Vec::Constant(mesh.m, mesh.dx());
  }
  std::string name() const override { return "bar"; }
  double value(const Vec& x) const override { return bar_energy(mesh_, x); }
  Vec gradient(const Vec& x) const override { return bar_gradient(mesh_, x); }
  bool is_admissible(const Vec& x) const override {
    Vec xi;
    cell_gradients(mesh_, x, xi);
    return (xi.array() > 0.0).all();
  }
  double min_energy() const override { return 0.0; }
  double noncvx_constant(double K) const override {
    if (!(K > 0.0)) return 0.0;
    const double dx = mesh_.dx();
    return 2.0 * bar_density_hessian_bound(mesh_, K) / (dx * dx);
  }
  bool has_hessian() const override { return true; }
  Mat hessian(const Vec& x) const override;
  bool has_regularizer() const override { return true; }
  Vec regularizer_apply(const Vec& v) const override;

private:
  BarMesh mesh_;
};

Mat BarModel::hessian(const Vec& x) const {
  const int m = mesh_.m;
  const double dx = mesh_.dx();
  Vec xi, s;
  cell_gradients(mesh_, x, xi);
  if (!(xi.array() > 0.0).all()) throw std::domain_error("bar hessian: inadmissible state");
  second_differences(mesh_, x, s);

  Mat h = Mat::Zero(m, m);
  // cell part: (e''(xi_i)/dx) * stencil (+1 at node i, -1 at node i-1)
  for (int i = 1; i <= m; ++i) {
    const double w = density_d2(mesh_, xi[i - 1]) / dx;
    h(i - 1, i - 1) += w;
    if (i >= 2) {
      h(i - 2, i - 2) += w;
      h(i - 1, i - 2) -= w;
      h(i - 2, i - 1) -= w;
    }
  }
  // regularizer part: (psi''(s_i)/dx^3) * stencil (+1, -2, +1) at nodes i-1, i, i+1
  const double dx3 = dx * dx * dx;
  for (int i = 1; i < m; ++i) {
    const double w = reg_psi_d2(mesh_, s[i - 1]) / dx3;
    const int nodes[3] = {i - 2, i - 1, i};  // 0-based dof indices of eta_{i-1}, eta_i, eta_{i+1}
    const double coef[3] = {1.0, -2.0, 1.0};
    for (int p = 0; p < 3; ++p) {
      if (nodes[p] < 0) continue;
      for (int r = 0; r < 3; ++r) {
        if (nodes[r] < 0) continue;
        h(nodes[p], nodes[r]) += w * coef[p] * coef[r];
      }
    }
  }
  return h;
}

Vec BarModel::regularizer_apply(const Vec& v) const {
  // A v for R(v) = dx * sum_i s_i(v)^2, i.e. (A v)_j = (s_{j-1} - 2 s_j + s_{j+1})/dx.
  const int m = mesh_.m;
  const double dx = mesh_.dx();
  Vec s;
  second_differences(mesh_, v, s);
  Vec out = Vec::Zero(m);
  auto sv = [&](int i) { return (i >= 1 && i <= m - 1) ? s[i - 1] : 0.0; };
  for (int j = 1; j <= m; ++j) out[j - 1] = (sv(j - 1) - 2.0 * sv(j) + sv(j + 1)) / dx;
  return out;
}

}  // namespace

void BarMesh::validate() const {
  if (m < 1) throw std::invalid_argument("BarMesh: m must be >= 1");
  if (!(length > 0.0)) throw std::invalid_argument("BarMesh: length must be positive");
  if (!(a >= 2.0)) throw std::invalid_argument("BarMesh: compression exponent a must be >= 2");
  if (svk_coeff < 0.0) throw std::invalid_argument("BarMesh: svk_coeff must be >= 0");
  if (reg_kind == RegularizerKind::Nonlinear && !(q > 1.0))
    throw std::invalid_argument("BarMesh: nonlinear regularizer needs q > 1");
}

Vec bar_identity_state(const BarMesh& mesh) {
  Vec eta(mesh.m);
  for (int i = 0; i < mesh.m; ++i) eta[i] = (i + 1) * mesh.dx();
  return eta;
}

double bar_energy(const BarMesh& mesh, const Vec& eta) {
  const double dx = mesh.dx();
  Vec xi, s;
  cell_gradients(mesh, eta, xi);
  if (!(xi.array() > 0.0).all()) return kInf;
  double e1 = 0.0;
  for (int i = 0; i < mesh.m; ++i) e1 += dx * density(mesh, xi[i]);
  second_differences(mesh, eta, s);
  double e2 = 0.0;
  for (int i = 0; i < s.size(); ++i) e2 += dx * reg_psi(mesh, s[i]);
  return e1 + e2;
}

Vec bar_gradient(const BarMesh& mesh, const Vec& eta) {
  const int m = mesh.m;
  const double dx = mesh.dx();
  Vec xi, s;
  cell_gradients(mesh, eta, xi);
  if (!(xi.array() > 0.0).all()) throw std::domain_error("bar_gradient: inadmissible state");
  second_differences(mesh, eta, s);

  Vec g(m);
  for (int j = 1; j <= m; ++j) {
    double gj = density_d1(mesh, xi[j - 1]);
    if (j < m) gj -= density_d1(mesh, xi[j]);
    g[j - 1] = gj;
  }
  auto pd = [&](int i) { return (i >= 1 && i <= m - 1) ? reg_psi_d1(mesh, s[i - 1]) : 0.0; };
  for (int j = 1; j <= m; ++j) g[j - 1] += (pd(j - 1) - 2.0 * pd(j) + pd(j + 1)) / dx;
  return g;
}

double bar_eps0(const BarMesh& mesh, double K) {
  if (!(K > 0.0)) return kInf;  // empty sublevel
  return std::pow(mesh.dx() / K, 1.0 / mesh.a);
}

double bar_density_hessian_bound(const BarMesh& mesh, double K) {
  if (!(K > 0.0)) return 0.0;
  const double eps0 = bar_eps0(mesh, K);
  double bound = mesh.a * (mesh.a + 1.0) * std::pow(eps0, -(mesh.a + 2.0));
  if (mesh.svk_coeff > 0.0) {
    const double xi_max_sq = 1.0 + std::sqrt(8.0 * K / (mesh.svk_coeff * mesh.dx()));
    bound += 0.5 * mesh.svk_coeff * std::max(3.0 * xi_max_sq - 1.0, 1.0);
  }
  return bound;
}

EnergyModelPtr bar_model(const BarMesh& mesh) { return std::make_shared<BarModel>(mesh); }

}  // namespace tsmm
