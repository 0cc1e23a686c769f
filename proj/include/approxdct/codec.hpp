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
#include <string>
#include <utility>
#include <vector>

#include "approxdct/imageio.hpp"
#include "approxdct/transforms.hpp"

namespace approxdct {

// Zig-zag scan over the 16x16 grid: anti-diagonals d = 0..30, walking
// up-right on even d and down-left on odd d, starting at (0, 0).
// scan[k] = {row, col} of the k-th coefficient.
const std::array<std::array<int, 2>, kN * kN>& zigzag_scan();

// rank[row][col] = position of (row, col) in the scan; inverse of the above.
const std::array<std::array<int, kN>, kN>& zigzag_rank();

// 2-D transform of one block: scaled(spec) * block * scaled(spec)^t. For
// integer kernels with an integral block the inner sandwich T K T^t runs
// exactly in int64 and only the final scaling touches floating point.
Mat16 transform_block(const TransformSpec& spec, const Mat16& block);

// Inverse 2-D transform: scaled(spec)^t * coeffs * scaled(spec). Valid for
// orthogonal specs only (throws NotInvertibleAsTranspose otherwise).
Mat16 inverse_block(const TransformSpec& spec, const Mat16& coeffs);

// Forward transform, zero every coefficient at zig-zag rank >= r, inverse
// transform. Real-valued output; the caller rounds and clamps. r must be
// in [1, 256].
Mat16 compress_block(const TransformSpec& spec, const Mat16& block, int r);

// Per-block compress_block over a whole plane, rounding half away from
// zero and clamping to [0, 255]. Dimensions must be multiples of 16
// (BadGeometry otherwise). Blocks run under OpenMP; the serial variant is
// the plain reference the parallel one is checked against.
ImagePlane compress_image(const TransformSpec& spec, const ImagePlane& img, int r);
ImagePlane compress_image_serial(const TransformSpec& spec, const ImagePlane& img, int r);

// Mean squared error and 10*log10(255^2 / mse); psnr returns +infinity
// when the planes are identical. BadGeometry on dimension mismatch.
double mse(const ImagePlane& a, const ImagePlane& b);
double psnr(const ImagePlane& a, const ImagePlane& b);

// Universal quality index over sliding 8x8 windows with unit step.
// Windows where exactly one denominator factor vanishes are excluded from
// the average; windows where both vanish score 1 when identical, else 0.
// BadGeometry on dimension mismatch or planes smaller than the window.
double uqi(const ImagePlane& a, const ImagePlane& b);

// |a - b| scaled by 2 and clamped, for qualitative inspection.
ImagePlane diff_image(const ImagePlane& a, const ImagePlane& b);

struct ImageMetrics {
    std::string image;
    double psnr_db = 0.0;
    double mse = 0.0;
    double uqi = 0.0;
};

// One (transform, r) row: per-image metrics in corpus order plus corpus
// averages, and average gaps against the exact-DCT row at the same r when
// a dct spec is part of the sweep. A gap between two lossless (+inf)
// averages is reported as 0.
struct SweepCell {
    TransformName transform = TransformName::Proposed;
    int r = 0;
    std::vector<ImageMetrics> per_image;
    double avg_psnr_db = 0.0;
    double avg_mse = 0.0;
    double avg_uqi = 0.0;
    bool has_diff = false;
    double psnr_diff_vs_dct_db = 0.0;
    double mse_diff_vs_dct = 0.0;
    double uqi_diff_vs_dct = 0.0;
};

struct QualityReport {
    // cells ordered by (spec index, r index)
    std::vector<SweepCell> cells;
    int num_images = 0;
};

// Full factorial evaluation over specs x r values x corpus. Images and
// settings are independent jobs scheduled under OpenMP when parallel is
// set; averages always accumulate in image-index order, so parallel and
// serial runs emit bit-identical results.
QualityReport sweep(const std::vector<TransformSpec>& specs,
                    const std::vector<std::pair<std::string, ImagePlane>>& corpus,
                    const std::vector<int>& r_values, bool parallel = true);

}  // namespace approxdct
