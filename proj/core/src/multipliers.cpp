#include "hardy/multipliers.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/optim.hpp"

namespace hardy {

HolderExponentResult holder_exponent(const ExponentFunction& p, const ExponentFunction& q) {
  if (p.grid() != q.grid()) throw std::invalid_argument("grid mismatch in holder_exponent");
  const int n = p.grid().size();
  std::vector<double> r(static_cast<size_t>(n));
  int bad = 0;
  for (int k = 0; k < n; ++k) {
    const double ip = std::isinf(p[k]) ? 0.0 : 1.0 / p[k];
    const double iq = std::isinf(q[k]) ? 0.0 : 1.0 / q[k];
    const double ir = iq - ip;
    if (ir < -1e-15) {
      ++bad;
      r[static_cast<size_t>(k)] = kInf;  // placeholder on the degenerate set
    } else if (ir <= 1e-15) {
      r[static_cast<size_t>(k)] = kInf;
    } else {
      r[static_cast<size_t>(k)] = 1.0 / ir;
    }
  }
  HolderExponentResult out;
  out.trivial = bad > 0;
  out.trivial_fraction = static_cast<double>(bad) / n;
  out.r = ExponentFunction(p.grid(), std::move(r));
  return out;
}

namespace {

CoeffVector params_to_coeffs(const std::vector<double>& x, int m) {
  CoeffVector c(m);
  for (int n = -m; n <= m; ++n) {
    const size_t i = static_cast<size_t>(2 * (n + m));
    c.set(n, cplx(x[i], x[i + 1]));
  }
  return c;
}

std::vector<double> coeffs_to_params(const CoeffVector& c, int m) {
  std::vector<double> x(static_cast<size_t>(2 * (2 * m + 1)), 0.0);
  for (int n = -m; n <= m; ++n) {
    const size_t i = static_cast<size_t>(2 * (n + m));
    x[i] = c.coeff(n).real();
    x[i + 1] = c.coeff(n).imag();
  }
  return x;
}

CoeffVector representing_coeffs(const GridFunction& g, int m) {
  if (2 * m + 1 >= g.size()) return exact_coeffs(g, m);
  return analyze(g, m);
}

/// Fejer kernel of the given order, rotated to be centered at theta0.
CoeffVector fejer_bump(int order, double theta0, int window) {
  CoeffVector c(window);
  const int m = std::min(order, window);
  for (int n = -m; n <= m; ++n) {
    const double w = 1.0 - static_cast<double>(std::abs(n)) / (order + 1.0);
    c.set(n, w * std::polar(1.0, -n * theta0));
  }
  return c;
}

}  // namespace

double multiplier_ratio(const GridFunction& a, const SpaceSpec& X, const SpaceSpec& Y,
                        const CoeffVector& g) {
  const GridFunction gs = sample_trig(g, a.grid());
  const double gx = space_norm(gs, X);
  if (!(gx > 1e-300)) return 0.0;
  return space_norm(pointwise_multiply(a, gs), Y) / gx;
}

MultiplierEstimate multiplier_norm_lower(const GridFunction& a, const SpaceSpec& X,
                                         const SpaceSpec& Y, int max_degree, long budget,
                                         uint64_t seed, int parallel) {
  const int m = max_degree;
  for (const auto& s : {X, Y}) {
    if (const auto g = spec_grid(s); g.has_value() && *g != a.grid()) {
      throw std::invalid_argument("space spec grid differs from the multiplier grid");
    }
  }
  if (max_abs(a) == 0.0) return MultiplierEstimate{0.0, CoeffVector(m)};

  const auto objective = [&](const std::vector<double>& x) {
    return multiplier_ratio(a, X, Y, params_to_coeffs(x, m));
  };

  std::vector<std::vector<double>> seeds;
  // Bump concentrated where |a| peaks.
  int argmax = 0;
  for (int k = 1; k < a.size(); ++k) {
    if (std::abs(a[k]) > std::abs(a[argmax])) argmax = k;
  }
  seeds.push_back(coeffs_to_params(fejer_bump(m, a.grid().angle(argmax), m), m));
  // Indicator of the near-maximal set; with a full window this is exact and
  // for two-level |a| it is the extremal shape.
  {
    const double peak = std::abs(a[argmax]);
    std::vector<cplx> mask(static_cast<size_t>(a.size()), 0.0);
    for (int k = 0; k < a.size(); ++k) {
      if (std::abs(a[k]) >= 0.999 * peak) mask[static_cast<size_t>(k)] = 1.0;
    }
    seeds.push_back(coeffs_to_params(representing_coeffs(GridFunction(a.grid(), std::move(mask)), m), m));
  }
  {
    CoeffVector unit(m);
    unit.set(0, 1.0);
    seeds.push_back(coeffs_to_params(unit, m));
  }

  const AscentResult res =
      maximize_ratio(objective, 2 * (2 * m + 1), seeds, 4, 1.0, budget, seed, parallel);
  return MultiplierEstimate{std::max(res.value, 0.0), params_to_coeffs(res.point, m)};
}

MultiplierReport verify_multiplier_identity(const GridFunction& a, const ExponentFunction& p,
                                            const ExponentFunction& q, int max_degree,
                                            long budget, uint64_t seed, int parallel) {
  const HolderExponentResult h = holder_exponent(p, q);
  MultiplierReport report;
  report.trivial_pair = h.trivial;
  report.r_norm = luxemburg_norm(a, *h.r);
  const MultiplierEstimate est =
      multiplier_norm_lower(a, variable_lebesgue(p), variable_lebesgue(q), max_degree, budget,
                            seed, parallel);
  report.lower = est.value;
  report.upper = 2.0 * report.r_norm;
  report.ratio = (report.r_norm > 0.0) ? report.lower / report.r_norm : 0.0;
  return report;
}

}  // namespace hardy
