#ifndef HARDY_MULTIPLIERS_HPP
#define HARDY_MULTIPLIERS_HPP

#include <optional>

#include "hardy/spaces.hpp"

namespace hardy {

struct HolderExponentResult {
  /// r with 1/q = 1/p + 1/r pointwise; absent only when the data is invalid.
  std::optional<ExponentFunction> r;
  /// Set when q > p on at least one node: in the continuum M(L^p, L^q) = {0}
  /// for p < q, so the pair is degenerate.  Advisory on a finite grid.
  bool trivial = false;
  double trivial_fraction = 0.0;
};

HolderExponentResult holder_exponent(const ExponentFunction& p, const ExponentFunction& q);

struct MultiplierEstimate {
  double value;
  CoeffVector certificate;
};

/// Lower bound on ||a||_{M(X,Y)} = sup_{||g||_X <= 1} ||a g||_Y, maximized
/// over trigonometric polynomials g of degree <= max_degree on a's grid.
MultiplierEstimate multiplier_norm_lower(const GridFunction& a, const SpaceSpec& X,
                                         const SpaceSpec& Y, int max_degree, long budget,
                                         uint64_t seed, int parallel = 1);

/// Ratio ||a g||_Y / ||g||_X for one candidate polynomial.
double multiplier_ratio(const GridFunction& a, const SpaceSpec& X, const SpaceSpec& Y,
                        const CoeffVector& g);

struct MultiplierReport {
  double lower = 0.0;        // multiplier_norm_lower value
  double upper = 0.0;        // 2 ||a||_{L^{r(.)}} (variable-exponent Hoelder)
  double ratio = 0.0;        // lower / ||a||_{L^{r(.)}}
  double r_norm = 0.0;       // ||a||_{L^{r(.)}}
  bool trivial_pair = false; // q > p somewhere (advisory)
};

/// Numerical check of M(L^{p(.)}, L^{q(.)}) = L^{r(.)}.
MultiplierReport verify_multiplier_identity(const GridFunction& a, const ExponentFunction& p,
                                            const ExponentFunction& q, int max_degree,
                                            long budget, uint64_t seed, int parallel = 1);

}  // namespace hardy

#endif
