#pragma once

namespace curvebody {

// Worker count for parallel sweeps: the CURVEBODY_THREADS environment
// variable when set to a positive integer, otherwise the OpenMP default
// (or 1 in builds without OpenMP).
int thread_count();

}  // namespace curvebody
