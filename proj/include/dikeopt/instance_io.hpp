#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "dikeopt/instance.hpp"

namespace dikeopt {

// Instance files are JSON documents:
//   {
//     "horizon": 1,
//     "segments": ["d0"],
//     "dike_heights": ["0", "1"],
//     "barrier_heights": ["0", "1"],
//     "dike_cost":      { "t,d,h1,h2": "value", ... },
//     "dike_expdam":    { "t,d,h2,hb": "value", ... },
//     "barrier_cost":   { "t,hb1,hb2": "value", ... },
//     "barrier_expdam": { "t,hb": "value", ... }
//   }
// Heights in keys are level indices into the height lists; values are exact
// decimal (or p/q) strings. Missing entries are preserved as missing so that
// validate_instance can report them.

Instance read_instance(std::istream& in);
Instance read_instance_file(const std::filesystem::path& path);

std::string instance_to_json(const Instance& inst);
void write_instance_file(const Instance& inst, const std::filesystem::path& path);

}  // namespace dikeopt
