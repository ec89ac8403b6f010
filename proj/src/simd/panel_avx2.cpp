// Copyright 2026 the lamellar-casimir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after a runtime CPU check (see dispatch.cpp).

#include <immintrin.h>

#include <array>
#include <cstddef>

#include "casimir/simd/dispatch.hpp"

namespace casimir::simd::avx2 {
namespace {

// Cody-Waite split of ln 2 and the Cephes (3,3) Pade coefficients for exp on
// [-ln2/2, ln2/2].
constexpr double kLog2e = 1.4426950408889634073599;
constexpr double kLn2Hi = 6.93145751953125e-1;
constexpr double kLn2Lo = 1.42860682030941723212e-6;
constexpr double kP0 = 1.26177193074810590878e-4;
constexpr double kP1 = 3.02994407707441961300e-2;
constexpr double kP2 = 9.99999999999999999910e-1;
constexpr double kQ0 = 3.00198505138664455042e-6;
constexpr double kQ1 = 2.52448340349684104192e-3;
constexpr double kQ2 = 2.27265548208155028766e-1;
constexpr double kQ3 = 2.00000000000000000009e0;
constexpr double kExpMax = 709.782712893383973096;
constexpr double kExpMin = -745.133219101941108420;

// 2^k for k in [-1022, 1023], k held in the low 32 bits of each lane.
inline __m256d pow2(__m128i k) {
    const __m256i k64 = _mm256_cvtepi32_epi64(k);
    const __m256i biased = _mm256_add_epi64(k64, _mm256_set1_epi64x(1023));
    return _mm256_castsi256_pd(_mm256_slli_epi64(biased, 52));
}

inline __m256d exp_pd(__m256d x) {
    const __m256d over = _mm256_cmp_pd(x, _mm256_set1_pd(kExpMax), _CMP_GT_OQ);
    const __m256d under = _mm256_cmp_pd(x, _mm256_set1_pd(kExpMin), _CMP_LT_OQ);
    const __m256d nan = _mm256_cmp_pd(x, x, _CMP_UNORD_Q);

    __m256d xc = _mm256_min_pd(_mm256_max_pd(x, _mm256_set1_pd(kExpMin)), _mm256_set1_pd(kExpMax));
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(xc, _mm256_set1_pd(kLog2e)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Hi), xc);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Lo), r);

    const __m256d rr = _mm256_mul_pd(r, r);
    __m256d px = _mm256_fmadd_pd(_mm256_set1_pd(kP0), rr, _mm256_set1_pd(kP1));
    px = _mm256_fmadd_pd(px, rr, _mm256_set1_pd(kP2));
    px = _mm256_mul_pd(px, r);
    __m256d qx = _mm256_fmadd_pd(_mm256_set1_pd(kQ0), rr, _mm256_set1_pd(kQ1));
    qx = _mm256_fmadd_pd(qx, rr, _mm256_set1_pd(kQ2));
    qx = _mm256_fmadd_pd(qx, rr, _mm256_set1_pd(kQ3));
    __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
    e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

    // n in [-1075, 1024]; scale in two halves so subnormal results round once.
    const __m128i ni = _mm256_cvtpd_epi32(n);
    const __m128i n1 = _mm_srai_epi32(ni, 1);
    const __m128i n2 = _mm_sub_epi32(ni, n1);
    e = _mm256_mul_pd(_mm256_mul_pd(e, pow2(n1)), pow2(n2));

    e = _mm256_blendv_pd(e, _mm256_set1_pd(__builtin_inf()), over);
    e = _mm256_blendv_pd(e, _mm256_setzero_pd(), under);
    e = _mm256_blendv_pd(e, x, nan);
    return e;
}

inline __m256d gap_kernel_pd(__m256d s, __m256d t0, __m256d inv_u, bool cube) {
    const __m256d quarter = _mm256_set1_pd(0.25);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d delta = _mm256_mul_pd(s, inv_u);
    const __m256d t = _mm256_add_pd(t0, delta);
    const __m256d p2 = _mm256_add_pd(
        one, _mm256_mul_pd(_mm256_mul_pd(quarter, delta), _mm256_add_pd(_mm256_mul_pd(two, t0), delta)));
    const __m256d poly =
        _mm256_add_pd(_mm256_mul_pd(_mm256_mul_pd(two, p2), _mm256_sub_pd(p2, one)), one);
    __m256d denom = _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(4.0), _mm256_sqrt_pd(p2)), t), t);
    if (cube) {
        denom = _mm256_mul_pd(denom, t);
    }
    const __m256d decay = exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), s));
    return _mm256_mul_pd(_mm256_div_pd(poly, denom), decay);
}

}  // namespace

void gap_kernel_panel(std::span<const double> s, std::span<double> out, double t0, double inv_u,
                      int power) {
    const __m256d vt0 = _mm256_set1_pd(t0);
    const __m256d vinv = _mm256_set1_pd(inv_u);
    const bool cube = power == 3;
    std::size_t i = 0;
    for (; i + 4 <= s.size(); i += 4) {
        _mm256_storeu_pd(out.data() + i, gap_kernel_pd(_mm256_loadu_pd(s.data() + i), vt0, vinv, cube));
    }
    if (i < s.size()) {
        std::array<double, 4> lane{};
        for (std::size_t j = 0; i + j < s.size(); ++j) {
            lane[j] = s[i + j];
        }
        _mm256_storeu_pd(lane.data(), gap_kernel_pd(_mm256_loadu_pd(lane.data()), vt0, vinv, cube));
        for (std::size_t j = 0; i + j < s.size(); ++j) {
            out[i + j] = lane[j];
        }
    }
    _mm256_zeroupper();
}

void exp(std::span<const double> x, std::span<double> out) {
    std::size_t i = 0;
    for (; i + 4 <= x.size(); i += 4) {
        _mm256_storeu_pd(out.data() + i, exp_pd(_mm256_loadu_pd(x.data() + i)));
    }
    if (i < x.size()) {
        std::array<double, 4> lane{};
        for (std::size_t j = 0; i + j < x.size(); ++j) {
            lane[j] = x[i + j];
        }
        _mm256_storeu_pd(lane.data(), exp_pd(_mm256_loadu_pd(lane.data())));
        for (std::size_t j = 0; i + j < x.size(); ++j) {
            out[i + j] = lane[j];
        }
    }
    _mm256_zeroupper();
}

}  // namespace casimir::simd::avx2
