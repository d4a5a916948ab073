#ifndef HARDY_TOEPLITZ_HPP
#define HARDY_TOEPLITZ_HPP

#include <optional>
#include <vector>

#include "hardy/fourier.hpp"
#include "hardy/spaces.hpp"

namespace hardy {

/// Finite section of the Toeplitz operator: the (order+1) x (order+1) matrix
/// with entry(k, j) = a_{k-j}.
class ToeplitzMatrix {
 public:
  ToeplitzMatrix(int order, std::vector<cplx> diagonals);

  int order() const { return order_; }
  int dim() const { return order_ + 1; }
  cplx diagonal(int d) const { return diagonals_[static_cast<size_t>(d + order_)]; }
  cplx entry(int k, int j) const { return diagonal(k - j); }

  std::vector<cplx> apply(const std::vector<cplx>& x) const;
  std::vector<cplx> apply_adjoint(const std::vector<cplx>& x) const;

 private:
  int order_;
  std::vector<cplx> diagonals_;  // a_{-order}..a_{order}
};

struct Symbol {
  CoeffVector coeffs;
  int degree() const { return coeffs.degree(); }
};

ToeplitzMatrix toeplitz_matrix(const Symbol& a, int order);

/// T_a f = P(a f) for analytic f, computed on a dealiasing grid of size the
/// next power of two >= 2(deg a + deg f) + 2, which makes the coefficients
/// exact.  Throws if f has negative-index coefficients.
CoeffVector apply_toeplitz(const Symbol& a, const CoeffVector& f);

/// Same computation forced onto a caller-supplied grid; throws when the
/// degree budget 2(deg a + deg f) < N is violated.
CoeffVector apply_toeplitz(const Symbol& a, const CoeffVector& f, const Grid& grid);

/// <T_a chi_j, chi_k> by quadrature on the given grid.
cplx brown_halmos_entry(const Symbol& a, int j, int k, const Grid& grid);

struct SymbolRecovery {
  std::optional<Symbol> symbol;  // present when every diagonal is constant within tol
  int worst_diagonal = 0;
  double max_deviation = 0.0;
};

/// Inverse of toeplitz_matrix: recover the symbol window from a square
/// matrix, or report the worst-violating diagonal when the matrix is not
/// Toeplitz within tol.
SymbolRecovery matrix_to_symbol(const std::vector<std::vector<cplx>>& matrix, double tol);

/// Largest singular value of the order-n finite section, by power iteration
/// on the Gram product (relative tolerance 1e-10, iteration cap 1e5).
double l2_operator_norm(const Symbol& a, int order);

struct OperatorNormEstimate {
  double value;
  CoeffVector certificate;  // analytic polynomial attaining the ratio
};

/// Lower bound on ||T_a||_{B(H[X],H[Y])}: maximize
/// space_norm(T_a f, Y) / space_norm(f, X) over analytic polynomials f of
/// degree <= max_degree on the given working grid.
OperatorNormEstimate operator_norm_lower(const Symbol& a, const SpaceSpec& X, const SpaceSpec& Y,
                                         const Grid& grid, int max_degree, long budget,
                                         uint64_t seed, int parallel = 1);

/// Ratio space_norm(T_a f, Y) / space_norm(f, X) for one candidate
/// (certificate reuse).
double operator_ratio(const Symbol& a, const SpaceSpec& X, const SpaceSpec& Y, const Grid& grid,
                      const CoeffVector& f);

}  // namespace hardy

#endif
