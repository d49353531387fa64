// SPDX-License-Identifier: Apache-2.0
#ifndef HETBLOCK_KERNELS_HPP
#define HETBLOCK_KERNELS_HPP

#include <cstddef>
#include <string>

namespace hetblock::kernels {

// Hot loop of the fixed-point iterations: given x_j = 1/a_j and a
// per-coordinate shift s, computes sum_j 1/(x_j + s). Both the
// degree-model update and the bipartite Steps I/II reduce to this sum.
using RecipShiftSumFn = double (*)(const double* x, size_t n, double shift);

double recip_shift_sum_scalar(const double* x, size_t n, double shift);
#if defined(__x86_64__) || defined(_M_X64)
double recip_shift_sum_avx2(const double* x, size_t n, double shift);
#endif
#if defined(__aarch64__)
double recip_shift_sum_neon(const double* x, size_t n, double shift);
#endif

enum class Backend { Scalar, Avx2, Neon };

/// Backend chosen at load time from CPU capabilities.
Backend active_backend();
std::string backend_name(Backend b);

/// Override the runtime selection (used by the equivalence tests).
void force_backend(Backend b);

/// Dispatches to the active backend.
double recip_shift_sum(const double* x, size_t n, double shift);

}  // namespace hetblock::kernels

#endif
