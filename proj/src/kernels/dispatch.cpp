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

#include <atomic>
#include <cstdlib>

#include "indoorpl/error.hpp"
#include "variants.hpp"

namespace indoorpl::kernels
{
namespace
{

Isa initial_isa()
{
    if (std::getenv("INDOORPL_FORCE_SCALAR") != nullptr)
        return Isa::Scalar;
    return detected_isa();
}

std::atomic<Isa> &active()
{
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

template <typename T>
void require_same_size(std::span<const T> a, std::span<const T> b)
{
    if (a.size() != b.size())
        throw LengthMismatch("kernel operands differ in length: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
}

const KernelTable &current() { return table(active().load(std::memory_order_relaxed)); }

} // namespace

std::string_view to_string(Isa isa)
{
    switch (isa)
    {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

Isa detected_isa()
{
#if defined(INDOORPL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    if (__builtin_cpu_supports("avx2"))
        return Isa::Avx2;
#endif
    return Isa::Scalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa)
{
    if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2)
        throw InvalidArgument("AVX2 kernels are not available on this CPU or build");
    active().store(isa, std::memory_order_relaxed);
}

const KernelTable &table(Isa isa)
{
#if defined(INDOORPL_HAVE_AVX2)
    if (isa == Isa::Avx2)
        return avx2_table();
#endif
    (void)isa;
    return scalar_table();
}

double dot(std::span<const double> a, std::span<const double> b)
{
    require_same_size(a, b);
    return current().dot(a.data(), b.data(), a.size());
}

double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b)
{
    require_same_size(a, b);
    require_same_size(w, a);
    return current().weighted_dot(w.data(), a.data(), b.data(), a.size());
}

double sum(std::span<const double> a) { return current().sum(a.data(), a.size()); }

double sum_sq_diff(std::span<const double> a, std::span<const double> b)
{
    require_same_size(a, b);
    return current().sum_sq_diff(a.data(), b.data(), a.size());
}

void affine_loss(double base, std::span<const double> slope, std::span<const double> log_d,
                 std::span<const double> extra, std::span<double> out)
{
    require_same_size(slope, log_d);
    require_same_size(slope, extra);
    require_same_size(slope, std::span<const double>(out));
    current().affine_loss(base, slope.data(), log_d.data(), extra.data(), out.data(), out.size());
}

void rssi_from_loss(double eirp, std::span<const double> loss, std::span<double> out)
{
    require_same_size(loss, std::span<const double>(out));
    current().rssi_from_loss(eirp, loss.data(), out.data(), out.size());
}

void segment_crossings(const WallBatch &walls, Point2 p, Point2 q, std::span<std::uint8_t> hit)
{
    if (hit.size() != walls.size())
        throw LengthMismatch("crossing output has " + std::to_string(hit.size()) + " slots for " +
                             std::to_string(walls.size()) + " walls");
    current().segment_crossings(walls.ax.data(), walls.ay.data(), walls.bx.data(), walls.by.data(), walls.size(), p.x,
                                p.y, q.x, q.y, hit.data());
}

} // namespace indoorpl::kernels
