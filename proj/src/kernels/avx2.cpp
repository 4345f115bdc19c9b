// SPDX-License-Identifier: Apache-2.0
//
// indoorpl: indoor path loss modelling and calibration for the 2.4 GHz ISM band
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "variants.hpp"

#include <immintrin.h>

namespace indoorpl::kernels
{
namespace
{

// Lane-wise accumulators are folded as ((l0 + l1) + (l2 + l3)) before the scalar tail.
inline double horizontal_sum(__m256d v)
{
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double dot(const double *a, const double *b, std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    double tail = horizontal_sum(acc);
    for (; i < n; ++i)
        tail += a[i] * b[i];
    return tail;
}

double weighted_dot(const double *w, const double *a, const double *b, std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(w + i), ab));
    }
    double tail = horizontal_sum(acc);
    for (; i < n; ++i)
        tail += w[i] * (a[i] * b[i]);
    return tail;
}

double sum(const double *a, std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    double tail = horizontal_sum(acc);
    for (; i < n; ++i)
        tail += a[i];
    return tail;
}

double sum_sq_diff(const double *a, const double *b, std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    double tail = horizontal_sum(acc);
    for (; i < n; ++i)
    {
        const double d = a[i] - b[i];
        tail += d * d;
    }
    return tail;
}

void affine_loss(double base, const double *slope, const double *log_d, const double *extra, double *out,
                 std::size_t n)
{
    const __m256d vbase = _mm256_set1_pd(base);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d lin = _mm256_add_pd(vbase, _mm256_mul_pd(_mm256_loadu_pd(slope + i), _mm256_loadu_pd(log_d + i)));
        _mm256_storeu_pd(out + i, _mm256_add_pd(lin, _mm256_loadu_pd(extra + i)));
    }
    for (; i < n; ++i)
        out[i] = (base + slope[i] * log_d[i]) + extra[i];
}

void rssi_from_loss(double eirp, const double *loss, double *out, std::size_t n)
{
    const __m256d veirp = _mm256_set1_pd(eirp);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_sub_pd(veirp, _mm256_loadu_pd(loss + i)));
    for (; i < n; ++i)
        out[i] = eirp - loss[i];
}

struct SignMasks
{
    __m256d pos;
    __m256d neg;
};

// Mirrors detail::orient_sign lane-wise.
inline SignMasks orient(__m256d ax, __m256d ay, __m256d bx, __m256d by, __m256d px, __m256d py)
{
    const __m256d ux = _mm256_sub_pd(bx, ax);
    const __m256d uy = _mm256_sub_pd(by, ay);
    const __m256d cross =
        _mm256_sub_pd(_mm256_mul_pd(ux, _mm256_sub_pd(py, ay)), _mm256_mul_pd(uy, _mm256_sub_pd(px, ax)));
    const __m256d len = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(ux, ux), _mm256_mul_pd(uy, uy)));
    const __m256d tol = _mm256_mul_pd(_mm256_set1_pd(geometric_epsilon), len);
    const __m256d ntol = _mm256_sub_pd(_mm256_setzero_pd(), tol);
    return {_mm256_cmp_pd(cross, tol, _CMP_GT_OQ), _mm256_cmp_pd(cross, ntol, _CMP_LT_OQ)};
}

// s1 * s2 <= 0 in mask form: not both positive and not both negative.
inline __m256d not_same_side(const SignMasks &s, const SignMasks &t)
{
    const __m256d same = _mm256_or_pd(_mm256_and_pd(s.pos, t.pos), _mm256_and_pd(s.neg, t.neg));
    return _mm256_andnot_pd(same, _mm256_castsi256_pd(_mm256_set1_epi64x(-1)));
}

void segment_crossings(const double *ax, const double *ay, const double *bx, const double *by, std::size_t n,
                       double px, double py, double qx, double qy, std::uint8_t *hit)
{
    const __m256d vpx = _mm256_set1_pd(px), vpy = _mm256_set1_pd(py);
    const __m256d vqx = _mm256_set1_pd(qx), vqy = _mm256_set1_pd(qy);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d eps = _mm256_set1_pd(geometric_epsilon);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d vax = _mm256_loadu_pd(ax + i), vay = _mm256_loadu_pd(ay + i);
        const __m256d vbx = _mm256_loadu_pd(bx + i), vby = _mm256_loadu_pd(by + i);

        const SignMasks s1 = orient(vax, vay, vbx, vby, vpx, vpy);
        const SignMasks s2 = orient(vax, vay, vbx, vby, vqx, vqy);
        const SignMasks s3 = orient(vpx, vpy, vqx, vqy, vax, vay);
        const SignMasks s4 = orient(vpx, vpy, vqx, vqy, vbx, vby);
        const __m256d proper = _mm256_and_pd(not_same_side(s1, s2), not_same_side(s3, s4));

        // Collinear branch: both endpoints of pq on the wall's line.
        const __m256d s1_zero = _mm256_andnot_pd(_mm256_or_pd(s1.pos, s1.neg), _mm256_castsi256_pd(_mm256_set1_epi64x(-1)));
        const __m256d s2_zero = _mm256_andnot_pd(_mm256_or_pd(s2.pos, s2.neg), _mm256_castsi256_pd(_mm256_set1_epi64x(-1)));
        const __m256d collinear = _mm256_and_pd(s1_zero, s2_zero);

        const __m256d ux = _mm256_sub_pd(vbx, vax);
        const __m256d uy = _mm256_sub_pd(vby, vay);
        const __m256d len2 = _mm256_add_pd(_mm256_mul_pd(ux, ux), _mm256_mul_pd(uy, uy));
        const __m256d tp = _mm256_div_pd(
            _mm256_add_pd(_mm256_mul_pd(_mm256_sub_pd(vpx, vax), ux), _mm256_mul_pd(_mm256_sub_pd(vpy, vay), uy)), len2);
        const __m256d tq = _mm256_div_pd(
            _mm256_add_pd(_mm256_mul_pd(_mm256_sub_pd(vqx, vax), ux), _mm256_mul_pd(_mm256_sub_pd(vqy, vay), uy)), len2);
        const __m256d lo = _mm256_min_pd(tp, tq);
        const __m256d hi = _mm256_max_pd(tp, tq);
        const __m256d tol = _mm256_div_pd(eps, _mm256_sqrt_pd(len2));
        const __m256d ntol = _mm256_sub_pd(_mm256_setzero_pd(), tol);
        const __m256d overlap =
            _mm256_and_pd(_mm256_cmp_pd(hi, ntol, _CMP_GE_OQ), _mm256_cmp_pd(lo, _mm256_add_pd(one, tol), _CMP_LE_OQ));

        const int bits = _mm256_movemask_pd(_mm256_blendv_pd(proper, overlap, collinear));
        hit[i + 0] = static_cast<std::uint8_t>(bits & 1);
        hit[i + 1] = static_cast<std::uint8_t>((bits >> 1) & 1);
        hit[i + 2] = static_cast<std::uint8_t>((bits >> 2) & 1);
        hit[i + 3] = static_cast<std::uint8_t>((bits >> 3) & 1);
    }
    for (; i < n; ++i)
        hit[i] = detail::crosses(ax[i], ay[i], bx[i], by[i], px, py, qx, qy) ? 1 : 0;
}

} // namespace

const KernelTable &avx2_table()
{
    static const KernelTable t{dot, weighted_dot, sum, sum_sq_diff, affine_loss, rssi_from_loss, segment_crossings};
    return t;
}

} // namespace indoorpl::kernels
