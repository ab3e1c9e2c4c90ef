#pragma once

namespace scsa {

/// Kernels that have an OpenMP path keep the serial loop as the reference.
/// Both paths produce bit-identical results.
enum class Execution { Serial, Parallel };

}  // namespace scsa
