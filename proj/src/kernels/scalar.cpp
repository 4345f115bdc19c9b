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

namespace indoorpl::kernels
{
namespace
{

double dot(const double *a, const double *b, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * b[i];
    return acc;
}

double weighted_dot(const double *w, const double *a, const double *b, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += w[i] * (a[i] * b[i]);
    return acc;
}

double sum(const double *a, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i];
    return acc;
}

double sum_sq_diff(const double *a, const double *b, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void affine_loss(double base, const double *slope, const double *log_d, const double *extra, double *out,
                 std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = (base + slope[i] * log_d[i]) + extra[i];
}

void rssi_from_loss(double eirp, const double *loss, double *out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = eirp - loss[i];
}

void segment_crossings(const double *ax, const double *ay, const double *bx, const double *by, std::size_t n,
                       double px, double py, double qx, double qy, std::uint8_t *hit)
{
    for (std::size_t i = 0; i < n; ++i)
        hit[i] = detail::crosses(ax[i], ay[i], bx[i], by[i], px, py, qx, qy) ? 1 : 0;
}

} // namespace

const KernelTable &scalar_table()
{
    static const KernelTable t{dot, weighted_dot, sum, sum_sq_diff, affine_loss, rssi_from_loss, segment_crossings};
    return t;
}

} // namespace indoorpl::kernels
