#pragma once

namespace leafword {

// Kernels with an OpenMP path keep a sequential reference path; results are
// identical under both.
enum class Execution { sequential, parallel };

}  // namespace leafword
