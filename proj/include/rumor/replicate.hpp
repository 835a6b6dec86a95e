#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rumor/experiment.hpp"

namespace rumor {

// Built-in experiment presets: "table1" (Erdos-Renyi, n=1e5, avg degree 4),
// "table2" (config model d=4), "table3" (geometric, expected degree 16), all
// t=8, p = 0.00..1.00 step 0.05, 100 runs per cell; "fig3" (ER distance
// histograms at p = 0.45/0.50/0.55); "fig4" (geometric success sweep at
// t = 8/16/32). Returns the paths of the files written under out_dir.
std::vector<std::string> replicate(const std::string& preset, std::uint64_t master_seed,
                                   const std::string& out_dir, int threads = 0);

// The spec a preset runs (without the fig3/fig4 grid overrides applied for
// "table*" presets); exposed so callers can tweak run counts.
ExperimentSpec preset_spec(const std::string& preset);

std::vector<double> default_p_grid();

} // namespace rumor
