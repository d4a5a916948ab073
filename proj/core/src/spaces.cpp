#include "hardy/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/optim.hpp"

namespace hardy {

// ---------------------------------------------------------------------------
// Exponents and weights
// ---------------------------------------------------------------------------

ExponentFunction::ExponentFunction(const Grid& grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)), p_minus_(kInf), p_plus_(1.0), has_inf_(false) {
  if (static_cast<int>(samples_.size()) != grid_.size()) {
    throw std::invalid_argument("exponent sample count does not match grid size");
  }
  bool any_finite = false;
  for (double p : samples_) {
    if (std::isnan(p) || p < 1.0) {
      throw std::invalid_argument("exponent samples must lie in [1, inf]");
    }
    if (std::isinf(p)) {
      has_inf_ = true;
    } else {
      any_finite = true;
      p_minus_ = std::min(p_minus_, p);
      p_plus_ = std::max(p_plus_, p);
    }
  }
  if (!any_finite) {
    p_minus_ = kInf;
    p_plus_ = kInf;
  }
}

ExponentFunction ExponentFunction::constant(const Grid& grid, double p) {
  return ExponentFunction(grid, std::vector<double>(static_cast<size_t>(grid.size()), p));
}

ExponentFunction ExponentFunction::conjugate() const {
  std::vector<double> out(samples_.size());
  for (size_t k = 0; k < samples_.size(); ++k) {
    const double p = samples_[k];
    if (std::isinf(p)) {
      out[k] = 1.0;
    } else if (p == 1.0) {
      out[k] = kInf;
    } else {
      out[k] = p / (p - 1.0);
    }
  }
  return ExponentFunction(grid_, std::move(out));
}

Weight::Weight(const Grid& grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (static_cast<int>(samples_.size()) != grid_.size()) {
    throw std::invalid_argument("weight sample count does not match grid size");
  }
  for (double w : samples_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("weight samples must be strictly positive and finite");
    }
  }
}

Weight Weight::constant(const Grid& grid, double w) {
  return Weight(grid, std::vector<double>(static_cast<size_t>(grid.size()), w));
}

Weight Weight::reciprocal() const {
  std::vector<double> out(samples_.size());
  for (size_t k = 0; k < samples_.size(); ++k) out[k] = 1.0 / samples_[k];
  return Weight(grid_, std::move(out));
}

// ---------------------------------------------------------------------------
// Space descriptors
// ---------------------------------------------------------------------------

SpaceSpec lebesgue(double p) {
  if (!(p > 1.0) || std::isinf(p)) {
    throw std::invalid_argument("Lebesgue exponent must lie in (1, inf)");
  }
  return LebesgueSpec{p};
}

SpaceSpec variable_lebesgue(ExponentFunction p) {
  return VariableLebesgueSpec{std::move(p), false};
}

SpaceSpec weighted_lorentz(double p, double q, Weight w) {
  if (!(p > 1.0) || std::isinf(p)) {
    throw std::invalid_argument("Lorentz primary exponent must lie in (1, inf)");
  }
  if (!(q >= 1.0)) {
    throw std::invalid_argument("Lorentz secondary exponent must lie in [1, inf]");
  }
  return WeightedLorentzSpec{p, q, std::move(w)};
}

std::string describe(const SpaceSpec& spec) {
  if (const auto* l = std::get_if<LebesgueSpec>(&spec)) {
    return "L^" + std::to_string(l->p);
  }
  if (std::get_if<VariableLebesgueSpec>(&spec)) {
    return "L^{p(.)}";
  }
  const auto& wl = std::get<WeightedLorentzSpec>(spec);
  return "L^{" + std::to_string(wl.p) + "," + std::to_string(wl.q) + "}(w)";
}

std::optional<Grid> spec_grid(const SpaceSpec& spec) {
  if (const auto* v = std::get_if<VariableLebesgueSpec>(&spec)) return v->p.grid();
  if (const auto* wl = std::get_if<WeightedLorentzSpec>(&spec)) return wl->w.grid();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rearrangements
// ---------------------------------------------------------------------------

RearrangementProfile::RearrangementProfile(std::vector<double> breakpoints,
                                           std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size() + 1 || values_.empty()) {
    throw std::invalid_argument("profile needs one breakpoint more than values");
  }
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
    throw std::invalid_argument("profile breakpoints must start at 0 and end at 1");
  }
  for (size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw std::invalid_argument("profile breakpoints must be strictly increasing");
    }
  }
  for (size_t i = 0; i + 1 < values_.size(); ++i) {
    if (values_[i] < values_[i + 1]) {
      throw std::invalid_argument("profile values must be non-increasing");
    }
  }
  cumulative_.assign(breakpoints_.size(), 0.0);
  for (size_t i = 0; i < values_.size(); ++i) {
    cumulative_[i + 1] = cumulative_[i] + values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
  }
}

double RearrangementProfile::value_at(double x) const {
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("profile argument outside [0,1]");
  if (x == 1.0) return values_.back();
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const size_t piece = static_cast<size_t>(it - breakpoints_.begin()) - 1;
  return values_[std::min(piece, values_.size() - 1)];
}

double RearrangementProfile::integral_to(double x) const {
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("profile argument outside [0,1]");
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  size_t piece = static_cast<size_t>(it - breakpoints_.begin());
  piece = (piece == 0) ? 0 : piece - 1;
  piece = std::min(piece, values_.size() - 1);
  return cumulative_[piece] + values_[piece] * (x - breakpoints_[piece]);
}

double distribution_function(const GridFunction& f, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("distribution threshold must be nonnegative");
  int count = 0;
  for (const cplx& z : f.samples()) {
    if (std::abs(z) > lambda) ++count;
  }
  return static_cast<double>(count) / f.size();
}

RearrangementProfile rearrangement(const GridFunction& f) {
  const int n = f.size();
  std::vector<double> mags(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) mags[static_cast<size_t>(k)] = std::abs(f[k]);
  std::sort(mags.begin(), mags.end(), std::greater<double>());

  std::vector<double> breakpoints{0.0};
  std::vector<double> values;
  for (int k = 0; k < n; ++k) {
    const double v = mags[static_cast<size_t>(k)];
    if (!values.empty() && values.back() == v) {
      breakpoints.back() = static_cast<double>(k + 1) / n;
    } else {
      values.push_back(v);
      breakpoints.push_back(static_cast<double>(k + 1) / n);
    }
  }
  return RearrangementProfile(std::move(breakpoints), std::move(values));
}

// ---------------------------------------------------------------------------
// Lebesgue and Luxemburg-Nakano norms
// ---------------------------------------------------------------------------

double lebesgue_norm(const GridFunction& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("Lebesgue exponent must be >= 1");
  if (std::isinf(p)) return max_abs(f);
  double sum = 0.0;
  for (const cplx& z : f.samples()) sum += std::pow(std::abs(z), p);
  return std::pow(sum / f.size(), 1.0 / p);
}

double modular(const GridFunction& f, const ExponentFunction& p) {
  if (f.grid() != p.grid()) throw std::invalid_argument("grid mismatch in modular");
  double sum = 0.0;
  double sup_inf_part = 0.0;
  bool has_inf_node = false;
  for (int k = 0; k < f.size(); ++k) {
    const double a = std::abs(f[k]);
    const double pk = p[k];
    if (std::isinf(pk)) {
      has_inf_node = true;
      sup_inf_part = std::max(sup_inf_part, a);
    } else {
      sum += std::pow(a, pk);
    }
  }
  return sum / f.size() + (has_inf_node ? sup_inf_part : 0.0);
}

double luxemburg_norm(const GridFunction& f, const ExponentFunction& p) {
  if (f.grid() != p.grid()) throw std::invalid_argument("grid mismatch in luxemburg_norm");
  const double l1 = lebesgue_norm(f, 1.0);
  if (l1 == 0.0) return 0.0;
  const double linf = max_abs(f);

  const auto modular_at = [&](double lambda) {
    std::vector<cplx> scaled(f.samples());
    for (cplx& z : scaled) z /= lambda;
    return modular(GridFunction(f.grid(), std::move(scaled)), p);
  };

  double lo = l1 / (1.0 + l1);
  double hi = std::max(linf, l1) + 1.0;
  // The bracket above covers finite grids without an infinite-exponent part;
  // grow it if the modular still straddles 1 at an endpoint.
  int guard = 0;
  while (modular_at(hi) > 1.0 && guard++ < 128) hi *= 2.0;
  guard = 0;
  while (modular_at(lo) < 1.0 && guard++ < 128) lo *= 0.5;

  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (modular_at(mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

// ---------------------------------------------------------------------------
// Lorentz norms
// ---------------------------------------------------------------------------

double double_star(const RearrangementProfile& profile, double x) {
  if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("double_star argument outside (0,1]");
  return profile.integral_to(x) / x;
}

namespace {

// int x^{e-1} dx over [x1, x2]
double power_integral(double e, double x1, double x2) {
  if (std::abs(e) < 1e-14) return std::log(x2 / x1);
  return (std::pow(x2, e) - std::pow(x1, e)) / e;
}

double lorentz_integrand(double x, double c, double d, double qp, double q) {
  return std::pow(x, qp - 1.0) * std::pow(c + d / x, q);
}

double adaptive_simpson(double (*g)(double, double, double, double, double), double a, double b,
                        double fa, double fm, double fb, double whole, double tol, int depth,
                        double c, double d, double qp, double q) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = g(lm, c, d, qp, q);
  const double frm = g(rm, c, d, qp, q);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, c, d, qp, q) +
         adaptive_simpson(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, c, d, qp, q);
}

double lorentz_piece_integral(double x1, double x2, double c, double d, double p, double q) {
  if (c == 0.0 && d == 0.0) return 0.0;
  const double qp = q / p;
  if (d == 0.0) {
    return std::pow(c, q) * power_integral(qp, x1, x2);
  }
  if (c == 0.0) {
    return std::pow(d, q) * power_integral(qp - q, x1, x2);
  }
  const double qround = std::round(q);
  if (std::abs(q - qround) < 1e-12 && qround <= 60.0) {
    // (c + d/x)^q expanded binomially; every term is a power integral.
    const int qi = static_cast<int>(qround);
    double total = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= qi; ++j) {
      const double term = binom * std::pow(c, qi - j) * std::pow(d, j);
      total += term * power_integral(qp - j, x1, x2);
      binom *= static_cast<double>(qi - j) / (j + 1.0);
    }
    return total;
  }
  const double fa = lorentz_integrand(x1, c, d, qp, q);
  const double fb = lorentz_integrand(x2, c, d, qp, q);
  const double fm = lorentz_integrand(0.5 * (x1 + x2), c, d, qp, q);
  const double whole = (x2 - x1) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(lorentz_integrand, x1, x2, fa, fm, fb, whole, 1e-12 * (1.0 + whole),
                          48, c, d, qp, q);
}

}  // namespace

double lorentz_norm(const RearrangementProfile& profile, double p, double q) {
  if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("Lorentz p must lie in (1, inf)");
  if (!(q >= 1.0)) throw std::invalid_argument("Lorentz q must lie in [1, inf]");
  const auto& bp = profile.breakpoints();
  const auto& val = profile.values();

  if (std::isinf(q)) {
    double sup = 0.0;
    for (size_t i = 0; i < val.size(); ++i) {
      const double x1 = bp[i];
      const double x2 = bp[i + 1];
      const double c = val[i];
      const double d = profile.integral_to(x1) - c * x1;
      // x^{1/p} (c + d/x) has no interior maximum, so endpoints suffice.
      if (x1 > 0.0) sup = std::max(sup, std::pow(x1, 1.0 / p) * (c + d / x1));
      sup = std::max(sup, std::pow(x2, 1.0 / p) * (c + d / x2));
    }
    return sup;
  }

  double total = 0.0;
  for (size_t i = 0; i < val.size(); ++i) {
    const double x1 = bp[i];
    const double x2 = bp[i + 1];
    const double c = val[i];
    const double d = (x1 == 0.0) ? 0.0 : profile.integral_to(x1) - c * x1;
    total += lorentz_piece_integral(x1, x2, c, d, p, q);
  }
  return std::pow(total, 1.0 / q);
}

double lorentz_norm(const GridFunction& f, double p, double q) {
  return lorentz_norm(rearrangement(f), p, q);
}

double weighted_lorentz_norm(const GridFunction& f, double p, double q, const Weight& w) {
  if (f.grid() != w.grid()) throw std::invalid_argument("grid mismatch in weighted Lorentz norm");
  std::vector<cplx> s(static_cast<size_t>(f.size()));
  for (int k = 0; k < f.size(); ++k) s[static_cast<size_t>(k)] = f[k] * w[k];
  return lorentz_norm(GridFunction(f.grid(), std::move(s)), p, q);
}

// ---------------------------------------------------------------------------
// Dispatch and associate spaces
// ---------------------------------------------------------------------------

double space_norm(const GridFunction& f, const SpaceSpec& spec) {
  if (const auto g = spec_grid(spec); g.has_value() && *g != f.grid()) {
    throw std::invalid_argument("grid mismatch between function and space spec");
  }
  if (const auto* l = std::get_if<LebesgueSpec>(&spec)) {
    return lebesgue_norm(f, l->p);
  }
  if (const auto* v = std::get_if<VariableLebesgueSpec>(&spec)) {
    return luxemburg_norm(f, v->p);
  }
  const auto& wl = std::get<WeightedLorentzSpec>(spec);
  return weighted_lorentz_norm(f, wl.p, wl.q, wl.w);
}

SpaceSpec associate_spec(const SpaceSpec& spec) {
  if (const auto* l = std::get_if<LebesgueSpec>(&spec)) {
    return LebesgueSpec{l->p / (l->p - 1.0)};
  }
  if (const auto* v = std::get_if<VariableLebesgueSpec>(&spec)) {
    return VariableLebesgueSpec{v->p.conjugate(), true};
  }
  const auto& wl = std::get<WeightedLorentzSpec>(spec);
  const double pp = wl.p / (wl.p - 1.0);
  const double qp = std::isinf(wl.q) ? 1.0 : (wl.q == 1.0 ? kInf : wl.q / (wl.q - 1.0));
  return WeightedLorentzSpec{pp, qp, wl.w.reciprocal()};
}

// ---------------------------------------------------------------------------
// Muckenhoupt characteristic
// ---------------------------------------------------------------------------

namespace {

double ap_scan(const std::vector<double>& pa, const std::vector<double>& pb, int n, double p,
               double pp, int len) {
  double best = 0.0;
  for (int s = 0; s < n; ++s) {
    const double avg_a = (pa[static_cast<size_t>(s + len)] - pa[static_cast<size_t>(s)]) / len;
    const double avg_b = (pb[static_cast<size_t>(s + len)] - pb[static_cast<size_t>(s)]) / len;
    const double v = std::pow(avg_a, 1.0 / p) * std::pow(avg_b, 1.0 / pp);
    best = std::max(best, v);
  }
  return best;
}

}  // namespace

double ap_characteristic(const Weight& w, double p) {
  if (!(p > 1.0) || std::isinf(p)) throw std::invalid_argument("A_p exponent must lie in (1, inf)");
  const double pp = p / (p - 1.0);
  const int n = w.grid().size();
  std::vector<double> pa(static_cast<size_t>(2 * n + 1), 0.0);
  std::vector<double> pb(static_cast<size_t>(2 * n + 1), 0.0);
  for (int k = 0; k < 2 * n; ++k) {
    const double wk = w[k % n];
    pa[static_cast<size_t>(k + 1)] = pa[static_cast<size_t>(k)] + std::pow(wk, p);
    pb[static_cast<size_t>(k + 1)] = pb[static_cast<size_t>(k)] + std::pow(wk, -pp);
  }
  double best = 0.0;
  if (n <= 4096) {
    for (int len = 1; len <= n; ++len) best = std::max(best, ap_scan(pa, pb, n, p, pp, len));
  } else {
    // Stratified subsample of about 10^6 arcs: for ~1000 geometrically spread
    // lengths, ~1000 evenly spaced starts; plus every dyadic arc.
    for (int len = 1; len <= n; len = std::max(len + 1, static_cast<int>(len * 1.01))) {
      const int stride = std::max(1, n / 1000);
      for (int s = 0; s < n; s += stride) {
        const double avg_a = (pa[static_cast<size_t>(s + len)] - pa[static_cast<size_t>(s)]) / len;
        const double avg_b = (pb[static_cast<size_t>(s + len)] - pb[static_cast<size_t>(s)]) / len;
        best = std::max(best, std::pow(avg_a, 1.0 / p) * std::pow(avg_b, 1.0 / pp));
      }
    }
    for (int len = 1; len <= n; len *= 2) {
      for (int s = 0; s + len <= n; s += len) {
        const double avg_a = (pa[static_cast<size_t>(s + len)] - pa[static_cast<size_t>(s)]) / len;
        const double avg_b = (pb[static_cast<size_t>(s + len)] - pb[static_cast<size_t>(s)]) / len;
        best = std::max(best, std::pow(avg_a, 1.0 / p) * std::pow(avg_b, 1.0 / pp));
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Log-Hoelder modulus
// ---------------------------------------------------------------------------

double log_holder_constant(const ExponentFunction& p) {
  if (p.has_infinite_part()) {
    throw std::invalid_argument("log-Hoelder constant requires a finite exponent");
  }
  const int n = p.grid().size();
  // Chordal distance depends only on the node offset; only offsets with
  // |t - tau| = 2 sin(pi d / N) < 1/2 contribute.
  std::vector<double> weight;
  for (int d = 1; d < n; ++d) {
    const double chord = 2.0 * std::sin(kPi * d / n);
    if (chord >= 0.5) break;
    weight.push_back(-std::log(chord));
  }
  double best = 0.0;
  for (int d = 1; d <= static_cast<int>(weight.size()); ++d) {
    const double wd = weight[static_cast<size_t>(d - 1)];
    for (int k = 0; k < n; ++k) {
      const double diff = std::abs(p[k] - p[(k + d) % n]);
      best = std::max(best, diff * wd);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Duality lower bound
// ---------------------------------------------------------------------------

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
    const cplx v = c.coeff(n);
    x[i] = v.real();
    x[i + 1] = v.imag();
  }
  return x;
}

/// Coefficients of degree <= m whose samples reproduce g when the window
/// covers the grid, otherwise the plain truncated analysis.
CoeffVector representing_coeffs(const GridFunction& g, int m) {
  if (2 * m + 1 >= g.size()) return exact_coeffs(g, m);
  return analyze(g, m);
}

}  // namespace

double duality_ratio(const GridFunction& f, const SpaceSpec& spec, const CoeffVector& q) {
  const SpaceSpec assoc = associate_spec(spec);
  const GridFunction qs = sample_trig(q, f.grid());
  const double denom = space_norm(qs, assoc);
  if (!(denom > 0.0)) return 0.0;
  return std::abs(pairing(f, qs)) / denom;
}

DualityEstimate norm_by_duality(const GridFunction& f, const SpaceSpec& spec, int max_degree,
                                long budget, uint64_t seed, int parallel) {
  const int m = max_degree;
  const SpaceSpec assoc = associate_spec(spec);

  if (max_abs(f) == 0.0) return DualityEstimate{0.0, CoeffVector(m)};

  const auto objective = [&](const std::vector<double>& x) {
    const CoeffVector q = params_to_coeffs(x, m);
    const GridFunction qs = sample_trig(q, f.grid());
    const double denom = space_norm(qs, assoc);
    if (!(denom > 1e-300)) return -1.0;
    return std::abs(pairing(f, qs)) / denom;
  };

  // Structured starts: the L^p extremal shape f |f|^{p-2} for a few p
  // guesses, the truncation of f itself, and the constant polynomial.
  std::vector<std::vector<double>> seeds;
  const auto add_gridfn_seed = [&](const GridFunction& g) {
    seeds.push_back(coeffs_to_params(representing_coeffs(g, m), m));
  };
  std::vector<double> p_guesses;
  if (const auto* l = std::get_if<LebesgueSpec>(&spec)) {
    p_guesses = {l->p};
  } else if (const auto* v = std::get_if<VariableLebesgueSpec>(&spec)) {
    p_guesses = {std::max(1.0, v->p.p_minus()), std::isinf(v->p.p_plus()) ? 2.0 : v->p.p_plus()};
  } else {
    p_guesses = {std::get<WeightedLorentzSpec>(spec).p};
  }
  for (double pg : p_guesses) {
    std::vector<cplx> h(static_cast<size_t>(f.size()));
    for (int k = 0; k < f.size(); ++k) {
      const double a = std::abs(f[k]);
      h[static_cast<size_t>(k)] = (a > 0.0) ? f[k] * std::pow(a, pg - 2.0) : 0.0;
    }
    if (const auto* wl = std::get_if<WeightedLorentzSpec>(&spec)) {
      for (int k = 0; k < f.size(); ++k) {
        h[static_cast<size_t>(k)] *= std::pow(wl->w[k], wl->p);
      }
    }
    add_gridfn_seed(GridFunction(f.grid(), std::move(h)));
  }
  add_gridfn_seed(f);
  {
    CoeffVector unit(m);
    unit.set(0, 1.0);
    seeds.push_back(coeffs_to_params(unit, m));
  }

  const AscentResult res =
      maximize_ratio(objective, 2 * (2 * m + 1), seeds, 4, 1.0, budget, seed, parallel);
  return DualityEstimate{std::max(res.value, 0.0), params_to_coeffs(res.point, m)};
}

}  // namespace hardy
