#include "hardy/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/optim.hpp"
#include "hardy/rng.hpp"

namespace hardy {

ToeplitzMatrix::ToeplitzMatrix(int order, std::vector<cplx> diagonals)
    : order_(order), diagonals_(std::move(diagonals)) {
  if (order < 0) throw std::invalid_argument("Toeplitz order must be nonnegative");
  if (diagonals_.size() != static_cast<size_t>(2 * order + 1)) {
    throw std::invalid_argument("Toeplitz matrix needs 2*order + 1 diagonals");
  }
}

std::vector<cplx> ToeplitzMatrix::apply(const std::vector<cplx>& x) const {
  if (x.size() != static_cast<size_t>(dim())) {
    throw std::invalid_argument("Toeplitz apply: dimension mismatch");
  }
  std::vector<cplx> y(x.size(), 0.0);
  for (int k = 0; k <= order_; ++k) {
    cplx sum = 0.0;
    const cplx* diag = diagonals_.data() + k + order_;  // entry(k, j) = diag[-j]
    for (int j = 0; j <= order_; ++j) sum += diag[-j] * x[static_cast<size_t>(j)];
    y[static_cast<size_t>(k)] = sum;
  }
  return y;
}

std::vector<cplx> ToeplitzMatrix::apply_adjoint(const std::vector<cplx>& x) const {
  std::vector<cplx> y(x.size(), 0.0);
  for (int j = 0; j <= order_; ++j) {
    cplx sum = 0.0;
    for (int k = 0; k <= order_; ++k) {
      sum += std::conj(entry(k, j)) * x[static_cast<size_t>(k)];
    }
    y[static_cast<size_t>(j)] = sum;
  }
  return y;
}

ToeplitzMatrix toeplitz_matrix(const Symbol& a, int order) {
  std::vector<cplx> diag(static_cast<size_t>(2 * order + 1));
  for (int d = -order; d <= order; ++d) {
    diag[static_cast<size_t>(d + order)] = a.coeffs.coeff(d);
  }
  return ToeplitzMatrix(order, std::move(diag));
}

namespace {

int next_power_of_two(int n) {
  int p = 8;
  while (p < n) p *= 2;
  return p;
}

void require_analytic(const CoeffVector& f) {
  for (int n = -f.half_width(); n < 0; ++n) {
    if (f.coeff(n) != 0.0) {
      throw std::invalid_argument("apply_toeplitz requires an analytic coefficient vector");
    }
  }
}

}  // namespace

CoeffVector apply_toeplitz(const Symbol& a, const CoeffVector& f, const Grid& grid) {
  require_analytic(f);
  const int out_degree = a.degree() + f.degree();
  if (2 * out_degree >= grid.size()) {
    throw std::invalid_argument("degree budget exceeded: 2(deg a + deg f) = " +
                                std::to_string(2 * out_degree) + " >= N = " +
                                std::to_string(grid.size()));
  }
  const GridFunction as = sample_trig(a.coeffs, grid);
  const GridFunction fs = sample_trig(f, grid);
  const CoeffVector product = analyze(pointwise_multiply(as, fs), out_degree);
  return riesz_project(product);
}

CoeffVector apply_toeplitz(const Symbol& a, const CoeffVector& f) {
  const int out_degree = a.degree() + f.degree();
  return apply_toeplitz(a, f, Grid(next_power_of_two(2 * out_degree + 2)));
}

cplx brown_halmos_entry(const Symbol& a, int j, int k, const Grid& grid) {
  if (j < 0 || k < 0) throw std::invalid_argument("Brown-Halmos indices must be nonnegative");
  CoeffVector chi_j(j);
  chi_j.set(j, 1.0);
  const CoeffVector image = apply_toeplitz(a, chi_j, grid);
  const GridFunction lhs = synthesize(image, grid);
  return pairing(lhs, GridFunction::basis(grid, k));
}

SymbolRecovery matrix_to_symbol(const std::vector<std::vector<cplx>>& matrix, double tol) {
  const int dim = static_cast<int>(matrix.size());
  if (dim == 0) throw std::invalid_argument("matrix_to_symbol: empty matrix");
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != dim) {
      throw std::invalid_argument("matrix_to_symbol: matrix must be square");
    }
  }
  const int order = dim - 1;
  SymbolRecovery out;
  std::vector<cplx> diag(static_cast<size_t>(2 * order + 1), 0.0);
  for (int d = -order; d <= order; ++d) {
    cplx mean = 0.0;
    int count = 0;
    for (int k = std::max(0, d); k <= std::min(order, order + d); ++k) {
      mean += matrix[static_cast<size_t>(k)][static_cast<size_t>(k - d)];
      ++count;
    }
    mean /= static_cast<double>(count);
    double dev = 0.0;
    for (int k = std::max(0, d); k <= std::min(order, order + d); ++k) {
      dev = std::max(dev, std::abs(matrix[static_cast<size_t>(k)][static_cast<size_t>(k - d)] - mean));
    }
    if (dev > out.max_deviation) {
      out.max_deviation = dev;
      out.worst_diagonal = d;
    }
    diag[static_cast<size_t>(d + order)] = mean;
  }
  if (out.max_deviation <= tol) {
    CoeffVector c(order);
    for (int d = -order; d <= order; ++d) c.set(d, diag[static_cast<size_t>(d + order)]);
    out.symbol = Symbol{c};
  }
  return out;
}

double l2_operator_norm(const Symbol& a, int order) {
  const ToeplitzMatrix t = toeplitz_matrix(a, order);
  const int dim = t.dim();

  Rng rng(0x5eedULL);
  std::vector<cplx> v(static_cast<size_t>(dim));
  for (cplx& z : v) z = rng.complex_normal();

  double norm_v = 0.0;
  for (const cplx& z : v) norm_v += std::norm(z);
  norm_v = std::sqrt(norm_v);
  if (norm_v == 0.0) return 0.0;
  for (cplx& z : v) z /= norm_v;

  double lambda = 0.0;
  const int cap = 100000;
  for (int it = 0; it < cap; ++it) {
    const std::vector<cplx> gv = t.apply_adjoint(t.apply(v));
    // Rayleigh quotient of the Gram product with the unit vector v.
    cplx rq = 0.0;
    for (int i = 0; i < dim; ++i) rq += std::conj(v[static_cast<size_t>(i)]) * gv[static_cast<size_t>(i)];
    const double next = std::max(rq.real(), 0.0);

    double norm_gv = 0.0;
    for (const cplx& z : gv) norm_gv += std::norm(z);
    norm_gv = std::sqrt(norm_gv);
    if (norm_gv == 0.0) return 0.0;

    v = gv;
    for (cplx& z : v) z /= norm_gv;

    if (it > 0 && std::abs(next - lambda) <= 1e-10 * std::max(next, 1e-300)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(lambda);
}

namespace {

CoeffVector analytic_params_to_coeffs(const std::vector<double>& x, int m) {
  CoeffVector c(m);
  for (int n = 0; n <= m; ++n) {
    const size_t i = static_cast<size_t>(2 * n);
    c.set(n, cplx(x[i], x[i + 1]));
  }
  return c;
}

std::vector<double> analytic_coeffs_to_params(const CoeffVector& c, int m) {
  std::vector<double> x(static_cast<size_t>(2 * (m + 1)), 0.0);
  for (int n = 0; n <= m; ++n) {
    const cplx v = c.coeff(n);
    x[static_cast<size_t>(2 * n)] = v.real();
    x[static_cast<size_t>(2 * n + 1)] = v.imag();
  }
  return x;
}

}  // namespace

double operator_ratio(const Symbol& a, const SpaceSpec& X, const SpaceSpec& Y, const Grid& grid,
                      const CoeffVector& f) {
  const CoeffVector fa = riesz_project(f);
  const double fx = space_norm(sample_trig(fa, grid), X);
  if (!(fx > 1e-300)) return 0.0;
  const CoeffVector image = apply_toeplitz(a, fa, grid);
  return space_norm(sample_trig(image, grid), Y) / fx;
}

OperatorNormEstimate operator_norm_lower(const Symbol& a, const SpaceSpec& X, const SpaceSpec& Y,
                                         const Grid& grid, int max_degree, long budget,
                                         uint64_t seed, int parallel) {
  const int m = max_degree;
  if (2 * (a.degree() + m) >= grid.size()) {
    throw std::invalid_argument("degree budget exceeded for the working grid");
  }
  for (const auto& s : {X, Y}) {
    if (const auto g = spec_grid(s); g.has_value() && *g != grid) {
      throw std::invalid_argument("space spec grid differs from the working grid");
    }
  }

  const auto objective = [&](const std::vector<double>& x) {
    return operator_ratio(a, X, Y, grid, analytic_params_to_coeffs(x, m));
  };

  std::vector<std::vector<double>> seeds;
  {
    // Top singular vector of the finite section: cheap and usually close to
    // the extremal analytic polynomial.
    const ToeplitzMatrix t = toeplitz_matrix(a, m);
    Rng rng(Rng::derive(seed, 0xabcdULL));
    std::vector<cplx> v(static_cast<size_t>(t.dim()));
    for (cplx& z : v) z = rng.complex_normal();
    for (int it = 0; it < 200; ++it) {
      std::vector<cplx> gv = t.apply_adjoint(t.apply(v));
      double nv = 0.0;
      for (const cplx& z : gv) nv += std::norm(z);
      nv = std::sqrt(nv);
      if (nv == 0.0) break;
      for (cplx& z : gv) z /= nv;
      v = gv;
    }
    CoeffVector c(m);
    for (int n = 0; n <= m; ++n) c.set(n, v[static_cast<size_t>(n)]);
    seeds.push_back(analytic_coeffs_to_params(c, m));
  }
  {
    CoeffVector unit(m);
    unit.set(0, 1.0);
    seeds.push_back(analytic_coeffs_to_params(unit, m));
  }

  const AscentResult res =
      maximize_ratio(objective, 2 * (m + 1), seeds, 4, 1.0, budget, seed, parallel);
  return OperatorNormEstimate{std::max(res.value, 0.0), analytic_params_to_coeffs(res.point, m)};
}

}  // namespace hardy
