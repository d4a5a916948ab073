#include "hardy/grid.hpp"

#include <cmath>

namespace hardy {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void require_same_grid(const GridFunction& f, const GridFunction& g) {
  if (f.grid() != g.grid()) {
    throw std::invalid_argument("grid mismatch: operands live on different grids");
  }
}

}  // namespace

Grid::Grid(int n_points) : n_(n_points) {
  if (n_points < 8 || !is_power_of_two(n_points)) {
    throw std::invalid_argument("grid size must be a power of two, at least 8; got " +
                                std::to_string(n_points));
  }
}

Grid make_grid(int n_points) { return Grid(n_points); }

GridFunction::GridFunction(const Grid& grid, std::vector<cplx> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (static_cast<int>(samples_.size()) != grid_.size()) {
    throw std::invalid_argument("sample count does not match grid size");
  }
  for (const cplx& z : samples_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("grid function samples must be finite");
    }
  }
}

GridFunction GridFunction::basis(const Grid& grid, int n) {
  std::vector<cplx> s(static_cast<size_t>(grid.size()));
  for (int k = 0; k < grid.size(); ++k) {
    s[static_cast<size_t>(k)] = std::polar(1.0, n * grid.angle(k));
  }
  return GridFunction(grid, std::move(s));
}

GridFunction GridFunction::constant(const Grid& grid, cplx value) {
  return GridFunction(grid, std::vector<cplx>(static_cast<size_t>(grid.size()), value));
}

cplx integrate(const GridFunction& f) {
  cplx sum = 0.0;
  for (const cplx& z : f.samples()) sum += z;
  return sum / static_cast<double>(f.size());
}

cplx pairing(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g);
  cplx sum = 0.0;
  for (int k = 0; k < f.size(); ++k) sum += f[k] * std::conj(g[k]);
  return sum / static_cast<double>(f.size());
}

GridFunction pointwise_multiply(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g);
  std::vector<cplx> s(static_cast<size_t>(f.size()));
  for (int k = 0; k < f.size(); ++k) s[static_cast<size_t>(k)] = f[k] * g[k];
  return GridFunction(f.grid(), std::move(s));
}

GridFunction pointwise_scale(const GridFunction& f, cplx c) {
  std::vector<cplx> s(static_cast<size_t>(f.size()));
  for (int k = 0; k < f.size(); ++k) s[static_cast<size_t>(k)] = c * f[k];
  return GridFunction(f.grid(), std::move(s));
}

GridFunction pointwise_add(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g);
  std::vector<cplx> s(static_cast<size_t>(f.size()));
  for (int k = 0; k < f.size(); ++k) s[static_cast<size_t>(k)] = f[k] + g[k];
  return GridFunction(f.grid(), std::move(s));
}

namespace {

double wrap_two_pi(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0) y += kTwoPi;
  return y;
}

}  // namespace

GridFunction indicator_arc(const Grid& grid, double lo, double hi) {
  const double length = hi - lo;
  std::vector<cplx> s(static_cast<size_t>(grid.size()), 0.0);
  if (length > 0) {
    const double start = wrap_two_pi(lo);
    const bool full = length >= kTwoPi;
    for (int k = 0; k < grid.size(); ++k) {
      const double rel = wrap_two_pi(grid.angle(k) - start);
      if (full || rel < length) s[static_cast<size_t>(k)] = 1.0;
    }
  }
  return GridFunction(grid, std::move(s));
}

double signed_angle(const Grid& grid, int k) {
  double t = grid.angle(k);
  if (t >= kPi) t -= kTwoPi;
  return t;
}

GridFunction indicator_star(const Grid& grid, double a, double b) {
  std::vector<cplx> s(static_cast<size_t>(grid.size()), 0.0);
  for (int k = 0; k < grid.size(); ++k) {
    const double t = signed_angle(grid, k);
    if (t >= a && t < b) s[static_cast<size_t>(k)] = 1.0;
  }
  return GridFunction(grid, std::move(s));
}

double max_abs(const GridFunction& f) {
  double m = 0.0;
  for (const cplx& z : f.samples()) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace hardy
