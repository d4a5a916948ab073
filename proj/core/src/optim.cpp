#include "hardy/optim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "hardy/rng.hpp"

namespace hardy {

namespace {

struct Restart {
  std::vector<double> start;
};

AscentResult ascend(const std::function<double(const std::vector<double>&)>& objective,
                    std::vector<double> x, long budget) {
  long evals = 0;
  double best = objective(x);
  ++evals;
  double scale = 1.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  double step = 0.25 * scale;

  const int dim = static_cast<int>(x.size());
  std::vector<double> probe = x;
  while (evals < budget && step > 1e-8 * scale) {
    bool improved = false;
    for (int i = 0; i < dim && evals < budget; ++i) {
      for (double sgn : {+1.0, -1.0}) {
        if (evals >= budget) break;
        probe = x;
        probe[static_cast<size_t>(i)] += sgn * step;
        const double v = objective(probe);
        ++evals;
        // Relative acceptance threshold keeps the trajectory invariant under
        // scaling of the objective.
        if (v > best + 1e-12 * std::abs(best)) {
          x = probe;
          best = v;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return AscentResult{best, std::move(x)};
}

}  // namespace

AscentResult maximize_ratio(const std::function<double(const std::vector<double>&)>& objective,
                            int dim,
                            const std::vector<std::vector<double>>& structured_seeds,
                            int random_restarts, double random_scale, long budget,
                            uint64_t seed, int parallel) {
  std::vector<Restart> restarts;
  for (const auto& s : structured_seeds) {
    if (static_cast<int>(s.size()) != dim) {
      throw std::invalid_argument("structured seed dimension mismatch");
    }
    restarts.push_back(Restart{s});
  }
  for (int r = 0; r < random_restarts; ++r) {
    Rng rng(Rng::derive(seed, static_cast<uint64_t>(r)));
    std::vector<double> x(static_cast<size_t>(dim));
    for (double& v : x) v = random_scale * rng.normal();
    restarts.push_back(Restart{std::move(x)});
  }
  if (restarts.empty()) restarts.push_back(Restart{std::vector<double>(static_cast<size_t>(dim), 0.0)});

  const long per_restart = std::max<long>(budget / static_cast<long>(restarts.size()), 16);
  std::vector<AscentResult> results(restarts.size());

  const int workers = std::max(1, std::min<int>(parallel, static_cast<int>(restarts.size())));
  if (workers == 1) {
    for (size_t i = 0; i < restarts.size(); ++i) {
      results[i] = ascend(objective, restarts[i].start, per_restart);
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        while (true) {
          const size_t i = next.fetch_add(1);
          if (i >= restarts.size()) break;
          results[i] = ascend(objective, restarts[i].start, per_restart);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  size_t best = 0;
  for (size_t i = 1; i < results.size(); ++i) {
    if (results[i].value > results[best].value) best = i;
  }
  return results[best];
}

}  // namespace hardy
