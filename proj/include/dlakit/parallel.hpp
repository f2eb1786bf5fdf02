#pragma once

namespace dlakit {

/// Caps the OpenMP worker count from DLAKIT_THREADS when it holds a positive
/// integer; other values are ignored. Returns the resulting cap.
int configure_threads();

int max_threads();

}  // namespace dlakit
