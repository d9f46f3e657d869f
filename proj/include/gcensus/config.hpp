#pragma once

namespace gcensus {

// Process-wide cap on graph order. Constructors refuse to build anything
// larger. Default 20000.
int max_order();
void set_max_order(int n);

// Worker threads for the counting kernels. Results never depend on this.
int thread_count();
void set_thread_count(int n);

inline constexpr const char* kToolName = "gcensus";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace gcensus
