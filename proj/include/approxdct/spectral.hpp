/*
Copyright 2026 the approxdct authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <array>
#include <complex>

#include "approxdct/transforms.hpp"

namespace approxdct {

// Row m of an orthonormalized kernel, read as a 16-tap FIR filter:
// H(omega) = sum_n row[n] e^(-j omega n).
std::complex<double> transfer_function(const Vec16& row, double omega);

// Squared magnitude gap |H_ref(omega) - H_approx(omega)|^2.
double distance_at(const Vec16& ref_row, const Vec16& approx_row, double omega);

// Integral of distance_at over [0, pi]. Adaptive Gauss-Kronrod 7/15 driven
// to an absolute tolerance of 1e-8; throws QuadratureFailure if the
// subdivision cap is hit, which no 16-tap row can trigger in practice.
double error_energy(const Vec16& ref_row, const Vec16& approx_row);

// Single-row convenience over full matrices. Throws RowMismatch when row
// is outside [0, kN).
double error_energy(const Mat16& reference, const Mat16& approx, int row);

// Closed form pi * ||ref - approx||^2. The quadrature has to agree with
// this for every row; the acceptance suite checks the two independently.
double parseval_energy(const Vec16& ref_row, const Vec16& approx_row);

struct SpectralReport {
    TransformName name = TransformName::Proposed;
    std::array<double, kN> row_energy{};
    double total = 0.0;
};

// Error energy of every row of spec against reference (both taken in their
// orthonormalized form). Rows are independent, so they run under OpenMP
// unless parallel is false; the total is always reduced in row order.
SpectralReport full_report(const TransformSpec& spec, const TransformSpec& reference,
                           bool parallel = true);

}  // namespace approxdct
