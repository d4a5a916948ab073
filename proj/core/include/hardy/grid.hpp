#ifndef HARDY_GRID_HPP
#define HARDY_GRID_HPP

#include <complex>
#include <stdexcept>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Uniform discretization of the unit circle with nodes theta_k = 2*pi*k/N,
/// carrying the normalized measure dm = |dt|/(2*pi).  N must be a power of
/// two, N >= 8, so that products of the degree budgets used elsewhere stay
/// below the Nyquist limit.
class Grid {
 public:
  explicit Grid(int n_points);

  int size() const { return n_; }
  double angle(int k) const { return kTwoPi * static_cast<double>(k) / n_; }
  double spacing() const { return kTwoPi / n_; }

  friend bool operator==(const Grid& a, const Grid& b) { return a.n_ == b.n_; }
  friend bool operator!=(const Grid& a, const Grid& b) { return a.n_ != b.n_; }

 private:
  int n_;
};

Grid make_grid(int n_points);

/// Complex samples of a function at the grid nodes.  Immutable after
/// construction; all samples are required to be finite.
class GridFunction {
 public:
  GridFunction(const Grid& grid, std::vector<cplx> samples);

  const Grid& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  const std::vector<cplx>& samples() const { return samples_; }
  const cplx& operator[](int k) const { return samples_[static_cast<size_t>(k)]; }

  /// chi_n sampled on the grid: e^{i n theta_k}.
  static GridFunction basis(const Grid& grid, int n);
  static GridFunction constant(const Grid& grid, cplx value);

 private:
  Grid grid_;
  std::vector<cplx> samples_;
};

cplx integrate(const GridFunction& f);

/// <f,g> = integral of f * conj(g) dm; conjugate-linear in g.
cplx pairing(const GridFunction& f, const GridFunction& g);

GridFunction pointwise_multiply(const GridFunction& f, const GridFunction& g);
GridFunction pointwise_scale(const GridFunction& f, cplx c);
GridFunction pointwise_add(const GridFunction& f, const GridFunction& g);

/// Indicator of the arc {theta : lo <= theta < hi (mod 2*pi)} snapped to grid
/// nodes with the half-open convention.  lo == hi gives the empty set; an arc
/// of full length 2*pi gives the whole circle.
GridFunction indicator_arc(const Grid& grid, double lo, double hi);

/// Indicator I*_G for G = [a, b) in the [-pi, pi] parameterization: node
/// theta_k belongs to the set when its signed angle lies in [a, b).
GridFunction indicator_star(const Grid& grid, double a, double b);

/// Signed angle of node k, wrapped into [-pi, pi).
double signed_angle(const Grid& grid, int k);

double max_abs(const GridFunction& f);

}  // namespace hardy

#endif
