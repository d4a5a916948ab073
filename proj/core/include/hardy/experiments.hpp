#ifndef HARDY_EXPERIMENTS_HPP
#define HARDY_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "hardy/config.hpp"
#include "hardy/result.hpp"

namespace hardy {

/// Registered experiment names, one per acceptance criterion.
std::vector<std::string> experiment_names();

/// Execute the experiment selected by config key "experiment".  Every
/// experiment is deterministic given its config, including the seed; the
/// config must provide "seed" explicitly.  Unknown names and invalid fields
/// raise ConfigError.
ResultRecord run(const Config& config);

/// Number of optimizer restarts evaluated concurrently (>= 1).  Output is
/// independent of this setting.
ResultRecord run(const Config& config, int parallel);

}  // namespace hardy

#endif
