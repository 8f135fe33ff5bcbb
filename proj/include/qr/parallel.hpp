#pragma once

#include <cstddef>

namespace qr {

// Every parallel kernel in the library has a serial twin selected by this
// policy. Kernels only parallelize loops whose iterations write disjoint
// indices (or merge integer counts in fixed order), so results are
// byte-identical across policies and thread counts.
enum class ExecPolicy { serial, parallel };

namespace parallel {

// requested thread cap; 0 means library default
void set_threads(int n);
int threads();

// kahan-compensated serial sum, used for all floating normalizations
double kahan_sum(const double* data, std::size_t n);

} // namespace parallel

} // namespace qr
