#pragma once

namespace dikeopt {

// Every parallel kernel in this project also has a serial path that computes
// bit-identical results; tests compare the two and tools/bench times them.
enum class ExecutionMode {
  serial,
  parallel,
};

}  // namespace dikeopt
