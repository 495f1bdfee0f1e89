#pragma once

namespace coalition {

/// Caps the OpenMP worker count for later library calls; n <= 0 restores the
/// runtime default.
void set_threads(int n);

/// Workers the next parallel region will use.
int max_threads();

}  // namespace coalition
