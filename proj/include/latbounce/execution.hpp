#ifndef LATBOUNCE_EXECUTION_HPP
#define LATBOUNCE_EXECUTION_HPP

namespace latbounce {

/// Selects the OpenMP kernel or its serial reference. Both produce identical
/// results; the serial path is kept for testing and benchmarking.
enum class Execution { serial, parallel };

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();
void set_threads(int n);

}  // namespace latbounce

#endif  // LATBOUNCE_EXECUTION_HPP
