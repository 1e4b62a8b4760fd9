#pragma once

#include <vector>

namespace tsmm {

/// Doubly indexed nonnegative sequences a, b, d on a grid of M windows with
/// N inner steps each, chained across windows so that the last entry of one
/// window is the first entry of the next, plus the coupling constant c > 0.
///
/// Entries are addressed as a(l, k) with l = 0..M-1 and k = 0..N.
class TwoScaleSeq {
public:
  /// Validates nonnegativity and the chaining identities
  /// a(l,0) == a(l-1,N), b(l,0) == b(l-1,N); throws std::invalid_argument
  /// on violation.
  TwoScaleSeq(int inner_steps, int windows, double c,
              std::vector<double> a, std::vector<double> b,
              std::vector<double> d);

  int inner_steps() const { return n_; }   // N
  int windows() const { return m_; }       // M
  double coupling() const { return c_; }   // c

  double a(int l, int k) const { return a_[idx(l, k)]; }
  double b(int l, int k) const { return b_[idx(l, k)]; }
  double d(int l, int k) const { return d_[idx(l, k)]; }

  /// max_k ( a(l,k) + (1/N) * sum_{i<=k} b(l,i) ), k = 1..N.
  double window_peak(int l) const;

private:
  std::size_t idx(int l, int k) const { return static_cast<std::size_t>(l) * (n_ + 1) + k; }

  int n_ = 0;
  int m_ = 0;
  double c_ = 0.0;
  std::vector<double> a_, b_, d_;
};

/// a0 * exp(k*c): bound for sequences with a_k <= a0 + c * sum_{i<k} a_i.
double gronwall_bound(double a0, double c, int k);

/// a0 * (1-c)^{-k}: bound for sequences with a_k <= a0 + c * sum_{i<=k} a_i,
/// valid for 0 < c < 1 (throws std::invalid_argument otherwise).
/// For c <= 1/2 this is at most a0 * exp(2*k*c).
double gronwall_shifted_bound(double a0, double c, int k);

/// Window bound (a(0,0) + b(0,0) + sum_{l=1..l_target} sum_{k=1..N} d(l,k)) * exp(4*c*N*l_target).
/// Requires c*N <= 1/4 (throws std::invalid_argument otherwise).
/// Note: the first window's d entries do not enter this expression; see
/// two_scale_envelope for a variant that majorizes every admissible sequence.
double two_scale_bound(const TwoScaleSeq& seq, int l_target);

/// Conservative variant that also counts the first window's d entries and its
/// growth factor: (a(0,0) + b(0,0) + sum_{l=0..l_target} sum_k d(l,k)) * exp(4*c*N*(l_target+1)).
/// Under c*N <= 1/4 this dominates window_peak(l) for every sequence
/// satisfying the step inequality checked by two_scale_hypothesis_holds.
double two_scale_envelope(const TwoScaleSeq& seq, int l_target);

/// True iff for all l = 0..M-1, k = 1..N (with b(., -1) read as b(0,0)):
///   a(l,k) + (1/N) b(l,k) <= a(l,k-1) + (1/N) b(l-1,k) + c*(a(l,k) + b(l,k)) + d(l,k)
/// up to a relative slack of 1e-12 absorbing roundoff.
bool two_scale_hypothesis_holds(const TwoScaleSeq& seq);

}  // namespace tsmm
