#ifndef HARDY_OPTIM_HPP
#define HARDY_OPTIM_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace hardy {

/// Derivative-free maximizer shared by the norm estimators.  Each restart
/// runs coordinate ascent with step halving from its own start point; the
/// incumbent only improves along a restart, so the result is monotone
/// non-decreasing in the evaluation budget.  Restarts are deterministic
/// given (seed, restart index) and are reduced in fixed index order, so the
/// outcome does not depend on the degree of parallelism.
struct AscentResult {
  double value = 0.0;
  std::vector<double> point;
};

AscentResult maximize_ratio(const std::function<double(const std::vector<double>&)>& objective,
                            int dim,
                            const std::vector<std::vector<double>>& structured_seeds,
                            int random_restarts, double random_scale, long budget,
                            uint64_t seed, int parallel = 1);

}  // namespace hardy

#endif
