#ifndef HARDY_FOURIER_HPP
#define HARDY_FOURIER_HPP

#include <vector>

#include "hardy/grid.hpp"

namespace hardy {

/// Finitely supported Fourier coefficients c_n over the symmetric window
/// n = -M..M.  Entries outside the window read as zero.
class CoeffVector {
 public:
  explicit CoeffVector(int half_width);
  CoeffVector(int half_width, std::vector<cplx> coeffs);

  int half_width() const { return half_width_; }
  int size() const { return 2 * half_width_ + 1; }

  cplx coeff(int n) const {
    if (n < -half_width_ || n > half_width_) return 0.0;
    return coeffs_[static_cast<size_t>(n + half_width_)];
  }
  void set(int n, cplx value);
  const std::vector<cplx>& raw() const { return coeffs_; }

  /// Largest |n| with c_n != 0 (0 for the zero vector).
  int degree() const;

  /// Same coefficients viewed in a wider window.
  CoeffVector padded(int half_width) const;

  friend CoeffVector operator+(const CoeffVector& a, const CoeffVector& b);
  friend CoeffVector operator*(cplx s, const CoeffVector& a);

 private:
  int half_width_;
  std::vector<cplx> coeffs_;
};

double max_abs(const CoeffVector& a);
double max_abs_diff(const CoeffVector& a, const CoeffVector& b);

/// c_n = <f, chi_n> for |n| <= half_width.  Exact for trigonometric
/// polynomials of degree <= half_width when 2*half_width < N.
CoeffVector analyze(const GridFunction& f, int half_width);

/// samples_k = sum_n c_n e^{i n theta_k}; requires 2*half_width + 1 <= N so
/// that analyze(synthesize(c)) = c.
GridFunction synthesize(const CoeffVector& c, const Grid& grid);

/// Trigonometric-polynomial evaluation at grid nodes without the synthesize
/// window guard; windows wider than the grid fold across aliases.
GridFunction sample_trig(const CoeffVector& c, const Grid& grid);

/// Coefficients of degree <= half_width whose samples reproduce f exactly;
/// requires 2*half_width + 1 >= N.  Aliased frequency classes are split
/// evenly across their representatives in the window.
CoeffVector exact_coeffs(const GridFunction& f, int half_width);

/// Riesz projection in coefficient form: keep n >= 0, zero out n < 0.
CoeffVector riesz_project(const CoeffVector& c);

/// Hilbert transform multiplier: c_n -> -i * sgn(n) * c_n.
CoeffVector hilbert_multiplier(const CoeffVector& c);

/// Cauchy singular operator: c_n -> c_n for n >= 0, -c_n for n < 0.
CoeffVector cauchy_singular(const CoeffVector& c);

/// Fejer smoothing of order n: c_k -> (1 - |k|/(n+1)) c_k for |k| <= n,
/// zero beyond.
CoeffVector fejer_smooth(const CoeffVector& c, int order);

/// Harmonic (Poisson) extension to radius r: c_n -> r^{|n|} c_n.
CoeffVector poisson_extend(const CoeffVector& c, double r);

/// Analytic completion u with Re u = harmonic extension for real-valued
/// inputs: coefficients 2 r^n c_n for n > 0, c_0 at n = 0, zero for n < 0.
CoeffVector analytic_extend(const CoeffVector& c, double r);

/// Principal-value quadrature of the conjugate-function integral with the
/// cot((theta_j - theta_k)/2) kernel: the singular node is excluded and the
/// remaining nodes at odd offsets are paired symmetrically, giving the
/// trapezoidal sum on the offset subgrid.  Exact on resolvable modes
/// (|n| < N/2); the aliased Nyquist mode is annihilated.
GridFunction hilbert_pv(const GridFunction& f);

/// hilbert_pv evaluated at one off-grid angle by the plain trapezoidal sum
/// over all nodes (no singularity when theta is not a node).
cplx hilbert_pv_at(const GridFunction& f, double theta);

}  // namespace hardy

#endif
