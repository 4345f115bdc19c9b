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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "indoorpl/geometry.hpp"

// Data-parallel inner loops. Every kernel has a scalar reference implementation and, on
// x86-64, an AVX2 variant selected at runtime. Element-wise kernels are bit-identical
// across variants; reductions agree to rounding (lane-wise partial sums).
namespace indoorpl::kernels
{

enum class Isa
{
    Scalar,
    Avx2
};

std::string_view to_string(Isa isa);

// Best variant supported by this CPU and build.
Isa detected_isa();

// Variant currently used by the dispatching entry points below. Defaults to detected_isa(),
// or Scalar when the environment variable INDOORPL_FORCE_SCALAR is set.
Isa active_isa();

// Overrides the active variant (tests, benchmarks). Throws InvalidArgument if unsupported.
void set_active_isa(Isa isa);

struct KernelTable
{
    double (*dot)(const double *a, const double *b, std::size_t n);
    double (*weighted_dot)(const double *w, const double *a, const double *b, std::size_t n);
    double (*sum)(const double *a, std::size_t n);
    double (*sum_sq_diff)(const double *a, const double *b, std::size_t n);
    // out[i] = base + slope[i] * log_d[i] + extra[i]
    void (*affine_loss)(double base, const double *slope, const double *log_d, const double *extra, double *out,
                        std::size_t n);
    // out[i] = eirp - loss[i]
    void (*rssi_from_loss)(double eirp, const double *loss, double *out, std::size_t n);
    // hit[i] = 1 when segment pq crosses wall i (detail::crosses semantics), else 0
    void (*segment_crossings)(const double *ax, const double *ay, const double *bx, const double *by, std::size_t n,
                              double px, double py, double qx, double qy, std::uint8_t *hit);
};

const KernelTable &table(Isa isa);

double dot(std::span<const double> a, std::span<const double> b);
double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);
double sum_sq_diff(std::span<const double> a, std::span<const double> b);
void affine_loss(double base, std::span<const double> slope, std::span<const double> log_d,
                 std::span<const double> extra, std::span<double> out);
void rssi_from_loss(double eirp, std::span<const double> loss, std::span<double> out);
void segment_crossings(const WallBatch &walls, Point2 p, Point2 q, std::span<std::uint8_t> hit);

} // namespace indoorpl::kernels
