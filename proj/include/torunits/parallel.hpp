#pragma once

namespace torunits {

/// Kernels with an OpenMP version keep their serial version as the reference.
enum class Exec { serial, parallel };

/// Thread count for parallel kernels; 0 leaves the OpenMP default.
void set_threads(int threads);
int max_threads();

}  // namespace torunits
