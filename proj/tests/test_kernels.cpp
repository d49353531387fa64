// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hetblock/kernels.hpp"
#include "hetblock/rng.hpp"

using namespace hetblock;

namespace {

double naive_sum(const std::vector<double>& x, double shift) {
    double s = 0.0;
    for (double v : x) s += 1.0 / (v + shift);
    return s;
}

}  // namespace

TEST_CASE("scalar kernel matches the naive loop") {
    SeededRng rng(17);
    for (int n : {0, 1, 3, 4, 7, 8, 33, 257}) {
        std::vector<double> x(n);
        for (double& v : x) v = rng.uniform(0.01, 50.0);
        double shift = rng.uniform(0.0, 5.0);
        CHECK(kernels::recip_shift_sum_scalar(x.data(), x.size(), shift) ==
              doctest::Approx(naive_sum(x, shift)).epsilon(1e-14));
    }
}

TEST_CASE("vector backends agree with the scalar kernel") {
    const auto restore = kernels::active_backend();
    std::vector<kernels::Backend> variants;
#if defined(__x86_64__) || defined(_M_X64)
    if (restore == kernels::Backend::Avx2)
        variants.push_back(kernels::Backend::Avx2);
#endif
#if defined(__aarch64__)
    variants.push_back(kernels::Backend::Neon);
#endif
    SeededRng rng(99);
    for (auto backend : variants) {
        for (int n : {1, 2, 3, 4, 5, 8, 15, 16, 17, 100, 1001}) {
            std::vector<double> x(n);
            for (double& v : x) v = rng.uniform(1e-6, 1e6);
            double shift = rng.uniform(0.0, 100.0);
            double ref = kernels::recip_shift_sum_scalar(x.data(), x.size(), shift);
            kernels::force_backend(backend);
            double got = kernels::recip_shift_sum(x.data(), x.size(), shift);
            CAPTURE(kernels::backend_name(backend));
            CAPTURE(n);
            CHECK(got == doctest::Approx(ref).epsilon(1e-12));
        }
    }
    kernels::force_backend(restore);
}

TEST_CASE("dispatch honors the forced backend") {
    const auto restore = kernels::active_backend();
    std::vector<double> x{1.0, 2.0, 4.0};
    kernels::force_backend(kernels::Backend::Scalar);
    CHECK(kernels::active_backend() == kernels::Backend::Scalar);
    CHECK(kernels::recip_shift_sum(x.data(), x.size(), 0.0) ==
          doctest::Approx(1.75));
    kernels::force_backend(restore);
}

TEST_CASE("backend names are distinct") {
    CHECK(kernels::backend_name(kernels::Backend::Scalar) == "scalar");
    CHECK(kernels::backend_name(kernels::Backend::Scalar) !=
          kernels::backend_name(kernels::Backend::Avx2));
    CHECK(kernels::backend_name(kernels::Backend::Avx2) !=
          kernels::backend_name(kernels::Backend::Neon));
}
