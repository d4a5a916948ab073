#ifndef HARDY_SPACES_HPP
#define HARDY_SPACES_HPP

#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "hardy/fourier.hpp"
#include "hardy/grid.hpp"

namespace hardy {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Measurable exponent p: T -> [1, inf] sampled on the grid.  Nodes with
/// p = inf form the essential-supremum part of the modular.
class ExponentFunction {
 public:
  ExponentFunction(const Grid& grid, std::vector<double> samples);
  static ExponentFunction constant(const Grid& grid, double p);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& samples() const { return samples_; }
  double operator[](int k) const { return samples_[static_cast<size_t>(k)]; }

  double p_minus() const { return p_minus_; }
  /// Essential sup over the finite part; +inf when every node is infinite.
  double p_plus() const { return p_plus_; }
  bool has_infinite_part() const { return has_inf_; }

  /// Conjugate exponent 1/p + 1/p' = 1 pointwise, with 1' = inf, inf' = 1.
  ExponentFunction conjugate() const;

 private:
  Grid grid_;
  std::vector<double> samples_;
  double p_minus_;
  double p_plus_;
  bool has_inf_;
};

class Weight {
 public:
  Weight(const Grid& grid, std::vector<double> samples);
  static Weight constant(const Grid& grid, double w);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& samples() const { return samples_; }
  double operator[](int k) const { return samples_[static_cast<size_t>(k)]; }

  Weight reciprocal() const;

 private:
  Grid grid_;
  std::vector<double> samples_;
};

struct LebesgueSpec {
  double p;  // 1 < p < inf
};

struct VariableLebesgueSpec {
  ExponentFunction p;
  /// The associate space of a variable Lebesgue space is identified only up
  /// to equivalent norms; duality-based comparisons against it carry a
  /// constant factor of 2.
  bool equivalent_only = false;
};

struct WeightedLorentzSpec {
  double p;  // 1 < p < inf
  double q;  // 1 <= q <= inf
  Weight w;
};

using SpaceSpec = std::variant<LebesgueSpec, VariableLebesgueSpec, WeightedLorentzSpec>;

SpaceSpec lebesgue(double p);
SpaceSpec variable_lebesgue(ExponentFunction p);
SpaceSpec weighted_lorentz(double p, double q, Weight w);
std::string describe(const SpaceSpec& spec);

/// Grid a grid-bound spec is tied to, if any.
std::optional<Grid> spec_grid(const SpaceSpec& spec);

/// Non-increasing rearrangement f* as a right-continuous step function on
/// [0,1]: values_[i] on [breakpoints_[i], breakpoints_[i+1]).
class RearrangementProfile {
 public:
  RearrangementProfile(std::vector<double> breakpoints, std::vector<double> values);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  size_t pieces() const { return values_.size(); }

  double value_at(double x) const;
  /// Running integral A(x) = int_0^x f*(y) dy, exact.
  double integral_to(double x) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<double> cumulative_;  // integral up to each breakpoint
};

double distribution_function(const GridFunction& f, double lambda);
RearrangementProfile rearrangement(const GridFunction& f);

/// Discrete L^p(dm) norm, p in [1, inf].
double lebesgue_norm(const GridFunction& f, double p);

/// Variable-exponent modular: mean of |f|^{p(t)} over finite-exponent nodes
/// plus max |f| over infinite-exponent nodes.
double modular(const GridFunction& f, const ExponentFunction& p);

/// Luxemburg-Nakano norm inf{lambda > 0 : modular(f/lambda) <= 1} by
/// bisection; the returned lambda satisfies modular(f/lambda) in
/// [1 - 1e-9, 1] for f != 0.
double luxemburg_norm(const GridFunction& f, const ExponentFunction& p);

/// f**(x) = (1/x) int_0^x f*(y) dy, evaluated exactly.
double double_star(const RearrangementProfile& profile, double x);

double lorentz_norm(const RearrangementProfile& profile, double p, double q);
double lorentz_norm(const GridFunction& f, double p, double q);
double weighted_lorentz_norm(const GridFunction& f, double p, double q, const Weight& w);

double space_norm(const GridFunction& f, const SpaceSpec& spec);

SpaceSpec associate_spec(const SpaceSpec& spec);

/// Muckenhoupt characteristic: sup over node-endpoint arcs of
/// (avg_arc w^p)^{1/p} (avg_arc w^{-p'})^{1/p'}.  Exact O(N^2) sweep for
/// N <= 4096; beyond that, a stratified subsample of 10^6 arcs plus all
/// dyadic arcs.
double ap_characteristic(const Weight& w, double p);

/// Smallest C with |p(t) - p(tau)| <= C / (-log|t - tau|) over node pairs at
/// chordal distance |t - tau| in (0, 1/2).
double log_holder_constant(const ExponentFunction& p);

struct DualityEstimate {
  double value;
  CoeffVector certificate;
};

/// Lower bound on space_norm(f, spec) through the duality formula
/// ||f||_X = sup{ |<f,q>| : q trig poly, ||q||_{X'} <= 1 } with q of degree
/// <= max_degree, maximized by seeded restarts plus coordinate ascent on the
/// 2(2M+1) real coefficients.
DualityEstimate norm_by_duality(const GridFunction& f, const SpaceSpec& spec,
                                int max_degree, long budget, uint64_t seed,
                                int parallel = 1);

/// Ratio |<f,q>| / ||q||_{X'} for a concrete polynomial (certificate reuse).
double duality_ratio(const GridFunction& f, const SpaceSpec& spec, const CoeffVector& q);

}  // namespace hardy

#endif
