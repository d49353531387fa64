// SPDX-License-Identifier: Apache-2.0
#include "hetblock/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace hetblock::kernels {

double recip_shift_sum_scalar(const double* x, size_t n, double shift) {
    double s = 0.0;
    for (size_t j = 0; j < n; ++j) s += 1.0 / (x[j] + shift);
    return s;
}

#if defined(__aarch64__)
double recip_shift_sum_neon(const double* x, size_t n, double shift) {
    float64x2_t acc = vdupq_n_f64(0.0);
    float64x2_t sh = vdupq_n_f64(shift);
    float64x2_t one = vdupq_n_f64(1.0);
    size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        float64x2_t v = vaddq_f64(vld1q_f64(x + j), sh);
        acc = vaddq_f64(acc, vdivq_f64(one, v));
    }
    double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; j < n; ++j) s += 1.0 / (x[j] + shift);
    return s;
}
#endif

namespace {

RecipShiftSumFn select_default() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return &recip_shift_sum_avx2;
#elif defined(__aarch64__)
    return &recip_shift_sum_neon;
#endif
    return &recip_shift_sum_scalar;
}

RecipShiftSumFn g_fn = select_default();
Backend g_backend =
#if defined(__x86_64__) || defined(_M_X64)
    __builtin_cpu_supports("avx2") ? Backend::Avx2 : Backend::Scalar;
#elif defined(__aarch64__)
    Backend::Neon;
#else
    Backend::Scalar;
#endif

}  // namespace

Backend active_backend() { return g_backend; }

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
        default: return "scalar";
    }
}

void force_backend(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2:
            g_fn = &recip_shift_sum_avx2;
            break;
#endif
#if defined(__aarch64__)
        case Backend::Neon:
            g_fn = &recip_shift_sum_neon;
            break;
#endif
        default:
            g_fn = &recip_shift_sum_scalar;
            b = Backend::Scalar;
            break;
    }
    g_backend = b;
}

double recip_shift_sum(const double* x, size_t n, double shift) {
    return g_fn(x, n, shift);
}

}  // namespace hetblock::kernels
