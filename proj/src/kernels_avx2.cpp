// SPDX-License-Identifier: Apache-2.0
// Compiled with -mavx2; only reached after the runtime cpuid check.
#include "hetblock/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace hetblock::kernels {

double recip_shift_sum_avx2(const double* x, size_t n, double shift) {
    __m256d acc = _mm256_setzero_pd();
    __m256d sh = _mm256_set1_pd(shift);
    __m256d one = _mm256_set1_pd(1.0);
    size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d v = _mm256_add_pd(_mm256_loadu_pd(x + j), sh);
        acc = _mm256_add_pd(acc, _mm256_div_pd(one, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; j < n; ++j) s += 1.0 / (x[j] + shift);
    return s;
}

}  // namespace hetblock::kernels

#endif
