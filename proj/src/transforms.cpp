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

#include "approxdct/transforms.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "approxdct/errors.hpp"

namespace approxdct {

namespace {

// The low-complexity kernel. Every entry is -1, 0 or 1; row squared norms
// follow the period-4 pattern 16, 14, 12, 14.
constexpr std::int8_t kProposed[kN][kN] = {
    { 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    { 1, 1, 1, 1, 1, 0, 1, 1,-1,-1, 0,-1,-1,-1,-1,-1},
    { 1, 1, 1, 0, 0,-1,-1,-1,-1,-1,-1, 0, 0, 1, 1, 1},
    { 1, 1, 1, 0,-1,-1,-1,-1, 1, 1, 1, 1, 0,-1,-1,-1},
    { 1, 1,-1,-1,-1,-1, 1, 1, 1, 1,-1,-1,-1,-1, 1, 1},
    { 1, 1,-1,-1,-1, 1, 1, 0, 0,-1,-1, 1, 1, 1,-1,-1},
    { 1, 0,-1,-1, 1, 1, 0,-1,-1, 0, 1, 1,-1,-1, 0, 1},
    { 1, 0,-1, 1, 1, 1,-1,-1, 1, 1,-1,-1,-1, 1, 0,-1},
    { 1,-1,-1, 1, 1,-1,-1, 1, 1,-1,-1, 1, 1,-1,-1, 1},
    { 1,-1,-1, 1,-1,-1, 0, 1,-1, 0, 1, 1,-1, 1, 1,-1},
    { 1,-1, 0, 1,-1, 0, 1,-1,-1, 1, 0,-1, 1, 0,-1, 1},
    { 0,-1, 1, 1,-1, 1, 1,-1, 1,-1,-1, 1,-1,-1, 1, 0},
    { 1,-1, 1,-1,-1, 1,-1, 1, 1,-1, 1,-1,-1, 1,-1, 1},
    { 1,-1, 1,-1, 0, 1,-1, 1,-1, 1,-1, 0, 1,-1, 1,-1},
    { 0,-1, 1,-1, 1,-1, 1, 0, 0, 1,-1, 1,-1, 1,-1, 0},
    { 1,-1, 0,-1, 1,-1, 1,-1, 1,-1, 1,-1, 1, 0, 1,-1},
};

bool scaled_is_orthogonal(const TransformSpec& spec, double tol) {
    const Mat16 a = spec.scaled();
    double worst = 0.0;
    for (int i = 0; i < kN; i++) {
        for (int j = 0; j < kN; j++) {
            double dot = 0.0;
            for (int k = 0; k < kN; k++) dot += a[i][k] * a[j][k];
            const double want = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::fabs(dot - want));
        }
    }
    return worst < tol;
}

}  // namespace

const char* to_string(TransformName name) {
    switch (name) {
        case TransformName::Proposed: return "proposed";
        case TransformName::Dct:      return "dct";
        case TransformName::Wht:      return "wht";
        case TransformName::Bas2010:  return "bas2010";
    }
    return "?";
}

Mat16 TransformSpec::kernel() const {
    Mat16 k{};
    for (int i = 0; i < kN; i++)
        for (int j = 0; j < kN; j++)
            k[i][j] = integer_kernel ? double(ikernel[i][j]) : rkernel[i][j];
    return k;
}

Mat16 TransformSpec::scaled() const {
    Mat16 k = kernel();
    for (int i = 0; i < kN; i++)
        for (int j = 0; j < kN; j++) k[i][j] *= scaling[i];
    return k;
}

TransformSpec build_proposed() {
    TransformSpec spec;
    spec.name = TransformName::Proposed;
    spec.label = "proposed";
    spec.integer_kernel = true;
    for (int i = 0; i < kN; i++) {
        int norm2 = 0;
        for (int j = 0; j < kN; j++) {
            spec.ikernel[i][j] = kProposed[i][j];
            norm2 += int(kProposed[i][j]) * int(kProposed[i][j]);
        }
        spec.scaling[i] = 1.0 / std::sqrt(double(norm2));
    }
    spec.orthogonal = scaled_is_orthogonal(spec, 1e-10);
    return spec;
}

TransformSpec build_exact_dct() {
    TransformSpec spec;
    spec.name = TransformName::Dct;
    spec.label = "dct";
    spec.integer_kernel = false;
    const double pi = std::acos(-1.0);
    for (int k = 0; k < kN; k++) {
        const double beta = (k == 0) ? 1.0 / std::sqrt(2.0) : 1.0;
        for (int n = 0; n < kN; n++)
            spec.rkernel[k][n] =
                beta * std::sqrt(2.0 / kN) * std::cos(pi * (2 * n + 1) * k / 32.0);
        spec.scaling[k] = 1.0;
    }
    spec.orthogonal = scaled_is_orthogonal(spec, 1e-10);
    return spec;
}

TransformSpec build_wht() {
    TransformSpec spec;
    spec.name = TransformName::Wht;
    spec.label = "wht";
    spec.integer_kernel = true;
    // Sylvester construction, natural (Kronecker) row order
    spec.ikernel[0][0] = 1;
    for (int size = 1; size < kN; size *= 2) {
        for (int i = 0; i < size; i++) {
            for (int j = 0; j < size; j++) {
                const std::int8_t v = spec.ikernel[i][j];
                spec.ikernel[i][j + size] = v;
                spec.ikernel[i + size][j] = v;
                spec.ikernel[i + size][j + size] = -v;
            }
        }
    }
    for (int i = 0; i < kN; i++) spec.scaling[i] = 0.25;
    spec.orthogonal = scaled_is_orthogonal(spec, 1e-10);
    return spec;
}

TransformSpec build_bas2010(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ComparatorUnavailable("bas2010 comparator file not found: " + path);

    TransformSpec spec;
    spec.name = TransformName::Bas2010;
    spec.label = "bas2010";
    spec.integer_kernel = true;
    spec.comparator_external = true;
    for (int i = 0; i < kN; i++) {
        for (int j = 0; j < kN; j++) {
            long v;
            if (!(in >> v))
                throw BadFormat("bas2010 file truncated in kernel row " +
                                std::to_string(i) + ": " + path);
            if (v < -127 || v > 127)
                throw BadFormat("bas2010 kernel entry out of int8 range: " + path);
            spec.ikernel[i][j] = std::int8_t(v);
        }
    }
    for (int i = 0; i < kN; i++) {
        if (!(in >> spec.scaling[i]))
            throw BadFormat("bas2010 file missing scaling entry " +
                            std::to_string(i) + ": " + path);
        if (!(spec.scaling[i] > 0.0))
            throw BadFormat("bas2010 scaling entries must be positive: " + path);
    }
    spec.orthogonal = scaled_is_orthogonal(spec, 1e-10);
    return spec;
}

std::optional<std::string> bas2010_path_from_env() {
    const char* p = std::getenv("APPROXDCT_BAS_MATRIX");
    if (p == nullptr || *p == '\0') return std::nullopt;
    return std::string(p);
}

Vec16 apply_forward(const TransformSpec& spec, const Vec16& x) {
    Vec16 y{};
    if (spec.integer_kernel) {
        // +/-1 (or small integer) weights: pure signed accumulation, no
        // rounding beyond what the inputs already carry
        for (int i = 0; i < kN; i++) {
            double acc = 0.0;
            for (int j = 0; j < kN; j++) {
                const int w = spec.ikernel[i][j];
                if (w != 0) acc += w * x[j];
            }
            y[i] = acc * spec.scaling[i];
        }
    } else {
        for (int i = 0; i < kN; i++) {
            double acc = 0.0;
            for (int j = 0; j < kN; j++) acc += spec.rkernel[i][j] * x[j];
            y[i] = acc * spec.scaling[i];
        }
    }
    return y;
}

Vec16 apply_inverse(const TransformSpec& spec, const Vec16& y) {
    if (!spec.orthogonal)
        throw NotInvertibleAsTranspose(
            std::string("transform '") + spec.label +
            "' is not orthogonal; transpose is not its inverse");
    const Mat16 a = spec.scaled();
    Vec16 x{};
    for (int j = 0; j < kN; j++) {
        double acc = 0.0;
        for (int i = 0; i < kN; i++) acc += a[i][j] * y[i];
        x[j] = acc;
    }
    return x;
}

}  // namespace approxdct
