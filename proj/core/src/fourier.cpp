#include "hardy/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hardy {

CoeffVector::CoeffVector(int half_width)
    : half_width_(half_width), coeffs_(static_cast<size_t>(2 * half_width + 1), 0.0) {
  if (half_width < 0) throw std::invalid_argument("half_width must be nonnegative");
}

CoeffVector::CoeffVector(int half_width, std::vector<cplx> coeffs)
    : half_width_(half_width), coeffs_(std::move(coeffs)) {
  if (half_width < 0) throw std::invalid_argument("half_width must be nonnegative");
  if (coeffs_.size() != static_cast<size_t>(2 * half_width + 1)) {
    throw std::invalid_argument("coefficient count must be 2*half_width + 1");
  }
  for (const cplx& z : coeffs_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("coefficients must be finite");
    }
  }
}

void CoeffVector::set(int n, cplx value) {
  if (n < -half_width_ || n > half_width_) {
    throw std::out_of_range("coefficient index outside window");
  }
  coeffs_[static_cast<size_t>(n + half_width_)] = value;
}

int CoeffVector::degree() const {
  int d = 0;
  for (int n = -half_width_; n <= half_width_; ++n) {
    if (coeff(n) != 0.0) d = std::max(d, std::abs(n));
  }
  return d;
}

CoeffVector CoeffVector::padded(int half_width) const {
  if (half_width < half_width_) {
    throw std::invalid_argument("padded window must not shrink");
  }
  CoeffVector out(half_width);
  for (int n = -half_width_; n <= half_width_; ++n) out.set(n, coeff(n));
  return out;
}

CoeffVector operator+(const CoeffVector& a, const CoeffVector& b) {
  const int m = std::max(a.half_width(), b.half_width());
  CoeffVector out(m);
  for (int n = -m; n <= m; ++n) out.set(n, a.coeff(n) + b.coeff(n));
  return out;
}

CoeffVector operator*(cplx s, const CoeffVector& a) {
  CoeffVector out(a.half_width());
  for (int n = -a.half_width(); n <= a.half_width(); ++n) out.set(n, s * a.coeff(n));
  return out;
}

double max_abs(const CoeffVector& a) {
  double m = 0.0;
  for (const cplx& z : a.raw()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const CoeffVector& a, const CoeffVector& b) {
  const int m = std::max(a.half_width(), b.half_width());
  double d = 0.0;
  for (int n = -m; n <= m; ++n) d = std::max(d, std::abs(a.coeff(n) - b.coeff(n)));
  return d;
}

CoeffVector analyze(const GridFunction& f, int half_width) {
  const int n_points = f.size();
  if (2 * half_width + 1 > n_points) {
    throw std::invalid_argument("analysis window too large for grid: 2M+1 = " +
                                std::to_string(2 * half_width + 1) + " > N = " +
                                std::to_string(n_points));
  }
  CoeffVector out(half_width);
  for (int n = -half_width; n <= half_width; ++n) {
    cplx sum = 0.0;
    for (int k = 0; k < n_points; ++k) {
      sum += f[k] * std::polar(1.0, -n * f.grid().angle(k));
    }
    out.set(n, sum / static_cast<double>(n_points));
  }
  return out;
}

GridFunction sample_trig(const CoeffVector& c, const Grid& grid) {
  std::vector<cplx> s(static_cast<size_t>(grid.size()), 0.0);
  for (int k = 0; k < grid.size(); ++k) {
    cplx sum = 0.0;
    for (int n = -c.half_width(); n <= c.half_width(); ++n) {
      sum += c.coeff(n) * std::polar(1.0, n * grid.angle(k));
    }
    s[static_cast<size_t>(k)] = sum;
  }
  return GridFunction(grid, std::move(s));
}

GridFunction synthesize(const CoeffVector& c, const Grid& grid) {
  if (2 * c.half_width() + 1 > grid.size()) {
    throw std::invalid_argument("synthesis window too large for grid");
  }
  return sample_trig(c, grid);
}

CoeffVector exact_coeffs(const GridFunction& f, int half_width) {
  const int n_points = f.size();
  if (2 * half_width + 1 < n_points) {
    throw std::invalid_argument("exact_coeffs requires 2*half_width + 1 >= N");
  }
  // DFT bins D_m for m = 0..N-1, then split each bin across its aliases in
  // the window so that sample_trig reproduces f exactly.
  std::vector<cplx> bins(static_cast<size_t>(n_points));
  for (int m = 0; m < n_points; ++m) {
    cplx sum = 0.0;
    for (int k = 0; k < n_points; ++k) {
      sum += f[k] * std::polar(1.0, -m * f.grid().angle(k));
    }
    bins[static_cast<size_t>(m)] = sum / static_cast<double>(n_points);
  }
  CoeffVector out(half_width);
  std::vector<int> reps(static_cast<size_t>(n_points), 0);
  for (int n = -half_width; n <= half_width; ++n) {
    reps[static_cast<size_t>(((n % n_points) + n_points) % n_points)]++;
  }
  for (int n = -half_width; n <= half_width; ++n) {
    const int m = ((n % n_points) + n_points) % n_points;
    out.set(n, bins[static_cast<size_t>(m)] / static_cast<double>(reps[static_cast<size_t>(m)]));
  }
  return out;
}

CoeffVector riesz_project(const CoeffVector& c) {
  CoeffVector out(c.half_width());
  for (int n = 0; n <= c.half_width(); ++n) out.set(n, c.coeff(n));
  return out;
}

CoeffVector hilbert_multiplier(const CoeffVector& c) {
  CoeffVector out(c.half_width());
  const cplx minus_i(0.0, -1.0);
  for (int n = -c.half_width(); n <= c.half_width(); ++n) {
    if (n > 0) {
      out.set(n, minus_i * c.coeff(n));
    } else if (n < 0) {
      out.set(n, -minus_i * c.coeff(n));
    }
  }
  return out;
}

CoeffVector cauchy_singular(const CoeffVector& c) {
  CoeffVector out(c.half_width());
  for (int n = -c.half_width(); n <= c.half_width(); ++n) {
    out.set(n, n >= 0 ? c.coeff(n) : -c.coeff(n));
  }
  return out;
}

CoeffVector fejer_smooth(const CoeffVector& c, int order) {
  if (order < 0) throw std::invalid_argument("Fejer order must be nonnegative");
  CoeffVector out(c.half_width());
  for (int n = -c.half_width(); n <= c.half_width(); ++n) {
    if (std::abs(n) <= order) {
      const double w = 1.0 - static_cast<double>(std::abs(n)) / (order + 1.0);
      out.set(n, w * c.coeff(n));
    }
  }
  return out;
}

CoeffVector poisson_extend(const CoeffVector& c, double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::invalid_argument("Poisson radius must lie in [0, 1)");
  }
  CoeffVector out(c.half_width());
  for (int n = -c.half_width(); n <= c.half_width(); ++n) {
    out.set(n, std::pow(r, std::abs(n)) * c.coeff(n));
  }
  return out;
}

CoeffVector analytic_extend(const CoeffVector& c, double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::invalid_argument("Poisson radius must lie in [0, 1)");
  }
  CoeffVector out(c.half_width());
  out.set(0, c.coeff(0));
  for (int n = 1; n <= c.half_width(); ++n) {
    out.set(n, 2.0 * std::pow(r, n) * c.coeff(n));
  }
  return out;
}

GridFunction hilbert_pv(const GridFunction& f) {
  const int n_points = f.size();
  // Pairing offsets m and -m cancels the even part of the kernel exactly:
  // out_j = (2/N) sum_{m odd, 0<m<N/2} (f_{j-m} - f_{j+m}) cot(pi m / N).
  std::vector<double> cot_table(static_cast<size_t>(n_points / 2), 0.0);
  for (int m = 1; m < n_points / 2; m += 2) {
    cot_table[static_cast<size_t>(m)] = 1.0 / std::tan(kPi * m / n_points);
  }
  std::vector<cplx> out(static_cast<size_t>(n_points));
  const double scale = 2.0 / n_points;
  for (int j = 0; j < n_points; ++j) {
    cplx sum = 0.0;
    for (int m = 1; m < n_points / 2; m += 2) {
      const int back = (j - m + n_points) % n_points;
      const int fwd = (j + m) % n_points;
      sum += (f[back] - f[fwd]) * cot_table[static_cast<size_t>(m)];
    }
    out[static_cast<size_t>(j)] = scale * sum;
  }
  return GridFunction(f.grid(), std::move(out));
}

cplx hilbert_pv_at(const GridFunction& f, double theta) {
  const int n_points = f.size();
  cplx sum = 0.0;
  for (int k = 0; k < n_points; ++k) {
    const double d = 0.5 * (theta - f.grid().angle(k));
    sum += f[k] / std::tan(d);
  }
  return sum / static_cast<double>(n_points);
}

}  // namespace hardy
