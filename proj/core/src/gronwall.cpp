#include "tsmm/gronwall.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tsmm {

namespace {
constexpr double kRelSlack = 1e-12;

bool leq_with_slack(double lhs, double rhs) {
  double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return lhs <= rhs + kRelSlack * scale;
}
}  // namespace

TwoScaleSeq::TwoScaleSeq(int inner_steps, int windows, double c,
                         std::vector<double> a, std::vector<double> b,
                         std::vector<double> d)
    : n_(inner_steps), m_(windows), c_(c), a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (n_ < 1 || m_ < 1) throw std::invalid_argument("TwoScaleSeq: need N >= 1 and M >= 1");
  if (!(c_ > 0.0)) throw std::invalid_argument("TwoScaleSeq: c must be positive");
  const std::size_t expect = static_cast<std::size_t>(m_) * (n_ + 1);
  if (a_.size() != expect || b_.size() != expect || d_.size() != expect)
    throw std::invalid_argument("TwoScaleSeq: arrays must have M*(N+1) entries");
  for (std::size_t i = 0; i < expect; ++i) {
    if (a_[i] < 0.0 || b_[i] < 0.0 || d_[i] < 0.0)
      throw std::invalid_argument("TwoScaleSeq: entries must be nonnegative");
  }
  for (int l = 1; l < m_; ++l) {
    if (!(leq_with_slack(a(l, 0), a(l - 1, n_)) && leq_with_slack(a(l - 1, n_), a(l, 0))))
      throw std::invalid_argument("TwoScaleSeq: chaining a(l,0) != a(l-1,N)");
    if (!(leq_with_slack(b(l, 0), b(l - 1, n_)) && leq_with_slack(b(l - 1, n_), b(l, 0))))
      throw std::invalid_argument("TwoScaleSeq: chaining b(l,0) != b(l-1,N)");
  }
}

double TwoScaleSeq::window_peak(int l) const {
  double run = 0.0;
  double peak = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= n_; ++k) {
    run += b(l, k);
    peak = std::max(peak, a(l, k) + run / n_);
  }
  return peak;
}

double gronwall_bound(double a0, double c, int k) {
  return a0 * std::exp(static_cast<double>(k) * c);
}

double gronwall_shifted_bound(double a0, double c, int k) {
  if (!(c > 0.0 && c < 1.0))
    throw std::invalid_argument("gronwall_shifted_bound: need 0 < c < 1");
  return a0 * std::pow(1.0 - c, -static_cast<double>(k));
}

namespace {
void check_two_scale_args(const TwoScaleSeq& seq, int l_target) {
  if (l_target < 0 || l_target >= seq.windows())
    throw std::invalid_argument("two_scale_bound: window index out of range");
  if (seq.coupling() * seq.inner_steps() > 0.25)
    throw std::invalid_argument("two_scale_bound: hypothesis c*N <= 1/4 violated");
}
}  // namespace

double two_scale_bound(const TwoScaleSeq& seq, int l_target) {
  check_two_scale_args(seq, l_target);
  double dsum = 0.0;
  for (int l = 1; l <= l_target; ++l)
    for (int k = 1; k <= seq.inner_steps(); ++k) dsum += seq.d(l, k);
  const double base = seq.a(0, 0) + seq.b(0, 0) + dsum;
  return base * std::exp(4.0 * seq.coupling() * seq.inner_steps() * l_target);
}

double two_scale_envelope(const TwoScaleSeq& seq, int l_target) {
  check_two_scale_args(seq, l_target);
  double dsum = 0.0;
  for (int l = 0; l <= l_target; ++l)
    for (int k = 1; k <= seq.inner_steps(); ++k) dsum += seq.d(l, k);
  const double base = seq.a(0, 0) + seq.b(0, 0) + dsum;
  return base * std::exp(4.0 * seq.coupling() * seq.inner_steps() * (l_target + 1));
}

bool two_scale_hypothesis_holds(const TwoScaleSeq& seq) {
  const int n = seq.inner_steps();
  const int m = seq.windows();
  const double c = seq.coupling();
  for (int l = 0; l < m; ++l) {
    for (int k = 1; k <= n; ++k) {
      const double b_prev = (l == 0) ? seq.b(0, 0) : seq.b(l - 1, k);
      const double lhs = seq.a(l, k) + seq.b(l, k) / n;
      const double rhs = seq.a(l, k - 1) + b_prev / n + c * (seq.a(l, k) + seq.b(l, k)) + seq.d(l, k);
      if (!leq_with_slack(lhs, rhs)) return false;
    }
  }
  return true;
}

}  // namespace tsmm
