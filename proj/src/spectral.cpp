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

#include "approxdct/spectral.hpp"

#include <cmath>

#include "approxdct/errors.hpp"

namespace approxdct {

namespace {

constexpr double kQuadTol = 1e-8;
constexpr int kMaxDepth = 24;

// 15-point Kronrod abscissae on [-1, 1]; every other node is one of the
// embedded 7-point Gauss nodes. Standard QUADPACK dqk15 constants.
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0,
};

constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992,
};

constexpr double kWg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020,
};

struct RowPair {
    const Vec16& ref;
    const Vec16& approx;

    double operator()(double omega) const { return distance_at(ref, approx, omega); }
};

// One Gauss-Kronrod 7/15 panel; the Gauss-Kronrod gap doubles as the
// local error estimate.
double gk15(const RowPair& f, double a, double b, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double gauss = kWg[3] * fc;
    double kron = kWgk[7] * fc;
    for (int j = 0; j < 7; j++) {
        const double dx = h * kXgk[j];
        const double sum = f(c - dx) + f(c + dx);
        kron += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    gauss *= h;
    kron *= h;
    err = std::fabs(kron - gauss);
    return kron;
}

double adapt(const RowPair& f, double a, double b, double tol, int depth) {
    double err = 0.0;
    const double whole = gk15(f, a, b, err);
    if (err <= tol) return whole;
    if (depth >= kMaxDepth)
        throw QuadratureFailure("row error-energy integral did not converge");
    const double mid = 0.5 * (a + b);
    return adapt(f, a, mid, 0.5 * tol, depth + 1) +
           adapt(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

std::complex<double> transfer_function(const Vec16& row, double omega) {
    std::complex<double> acc(0.0, 0.0);
    for (int n = 0; n < kN; n++) {
        if (row[n] == 0.0) continue;
        acc += row[n] * std::complex<double>(std::cos(omega * n), -std::sin(omega * n));
    }
    return acc;
}

double distance_at(const Vec16& ref_row, const Vec16& approx_row, double omega) {
    const std::complex<double> d =
        transfer_function(ref_row, omega) - transfer_function(approx_row, omega);
    return std::norm(d);
}

double error_energy(const Vec16& ref_row, const Vec16& approx_row) {
    const RowPair f{ref_row, approx_row};
    return adapt(f, 0.0, M_PI, kQuadTol, 0);
}

double error_energy(const Mat16& reference, const Mat16& approx, int row) {
    if (row < 0 || row >= kN)
        throw RowMismatch("row index outside the 16-point kernel");
    return error_energy(reference[row], approx[row]);
}

double parseval_energy(const Vec16& ref_row, const Vec16& approx_row) {
    double sq = 0.0;
    for (int n = 0; n < kN; n++) {
        const double d = ref_row[n] - approx_row[n];
        sq += d * d;
    }
    return M_PI * sq;
}

SpectralReport full_report(const TransformSpec& spec, const TransformSpec& reference,
                           bool parallel) {
    const Mat16 a = spec.scaled();
    const Mat16 c = reference.scaled();

    SpectralReport rep;
    rep.name = spec.name;

#pragma omp parallel for schedule(static) if (parallel)
    for (int m = 0; m < kN; m++) rep.row_energy[m] = error_energy(c[m], a[m]);

    for (int m = 0; m < kN; m++) rep.total += rep.row_energy[m];
    return rep;
}

}  // namespace approxdct
