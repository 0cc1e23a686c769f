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

#include "approxdct/codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "approxdct/errors.hpp"
#include "approxdct/fastdct.hpp"

namespace approxdct {

namespace {

constexpr int kBlockCoeffs = kN * kN;

struct Zigzag {
    std::array<std::array<int, 2>, kBlockCoeffs> scan{};
    std::array<std::array<int, kN>, kN> rank{};
};

Zigzag build_zigzag() {
    Zigzag z;
    int k = 0;
    for (int d = 0; d <= 2 * (kN - 1); d++) {
        const int lo = std::max(0, d - (kN - 1));
        const int hi = std::min(kN - 1, d);
        if (d % 2 == 0) {
            for (int row = hi; row >= lo; row--, k++) z.scan[k] = {row, d - row};
        } else {
            for (int row = lo; row <= hi; row++, k++) z.scan[k] = {row, d - row};
        }
    }
    for (int i = 0; i < kBlockCoeffs; i++) z.rank[z.scan[i][0]][z.scan[i][1]] = i;
    return z;
}

const Zigzag& zigzag() {
    static const Zigzag z = build_zigzag();
    return z;
}

// y = T x for an integer kernel; the proposed kernel goes through its
// 72-addition pipeline, everything else through the plain row products.
IVec16 kernel_times(const TransformSpec& spec, const IVec16& x) {
    if (spec.name == TransformName::Proposed) return fast_forward(x);
    IVec16 y{};
    for (int i = 0; i < kN; i++) {
        std::int64_t acc = 0;
        for (int j = 0; j < kN; j++) {
            const int w = spec.ikernel[i][j];
            if (w != 0) acc += w * x[j];
        }
        y[i] = acc;
    }
    return y;
}

bool to_integral(const Mat16& block, std::array<IVec16, kN>& out) {
    for (int i = 0; i < kN; i++) {
        for (int j = 0; j < kN; j++) {
            const double v = block[i][j];
            if (std::fabs(v) >= 1e12) return false;
            const std::int64_t n = std::llround(v);
            if (double(n) != v) return false;
            out[i][j] = n;
        }
    }
    return true;
}

Mat16 matmul(const Mat16& a, const Mat16& b) {
    Mat16 c{};
    for (int i = 0; i < kN; i++)
        for (int k = 0; k < kN; k++) {
            const double aik = a[i][k];
            if (aik == 0.0) continue;
            for (int j = 0; j < kN; j++) c[i][j] += aik * b[k][j];
        }
    return c;
}

Mat16 transpose(const Mat16& a) {
    Mat16 t{};
    for (int i = 0; i < kN; i++)
        for (int j = 0; j < kN; j++) t[j][i] = a[i][j];
    return t;
}

std::uint8_t quantize(double v) {
    const long p = std::lround(v);
    return std::uint8_t(std::clamp(p, 0L, 255L));
}

void check_same_shape(const ImagePlane& a, const ImagePlane& b, const char* who) {
    if (a.width != b.width || a.height != b.height)
        throw BadGeometry(std::string(who) + ": dimension mismatch");
}

double metric_psnr(double m) {
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / m);
}

// Average gap against the reference; two lossless averages count as no gap.
double gap(double value, double ref) {
    if (std::isinf(value) && std::isinf(ref) && value == ref) return 0.0;
    return value - ref;
}

}  // namespace

const std::array<std::array<int, 2>, kBlockCoeffs>& zigzag_scan() {
    return zigzag().scan;
}

const std::array<std::array<int, kN>, kN>& zigzag_rank() { return zigzag().rank; }

Mat16 transform_block(const TransformSpec& spec, const Mat16& block) {
    if (spec.integer_kernel) {
        std::array<IVec16, kN> ib;
        if (to_integral(block, ib)) {
            // columns, then rows: V = T (T K)^t is (T K T^t)^t, so go the
            // explicit way: U[., j] = T K[., j], V[i, .] = T U[i, .]
            std::array<IVec16, kN> u{};
            for (int j = 0; j < kN; j++) {
                IVec16 col;
                for (int i = 0; i < kN; i++) col[i] = ib[i][j];
                const IVec16 t = kernel_times(spec, col);
                for (int i = 0; i < kN; i++) u[i][j] = t[i];
            }
            Mat16 out;
            for (int i = 0; i < kN; i++) {
                const IVec16 t = kernel_times(spec, u[i]);
                for (int j = 0; j < kN; j++)
                    out[i][j] = double(t[j]) * spec.scaling[i] * spec.scaling[j];
            }
            return out;
        }
    }
    const Mat16 a = spec.scaled();
    return matmul(matmul(a, block), transpose(a));
}

Mat16 inverse_block(const TransformSpec& spec, const Mat16& coeffs) {
    if (!spec.orthogonal)
        throw NotInvertibleAsTranspose(std::string(to_string(spec.name)) +
                                       ": scaled kernel is not orthogonal");
    const Mat16 a = spec.scaled();
    return matmul(matmul(transpose(a), coeffs), a);
}

Mat16 compress_block(const TransformSpec& spec, const Mat16& block, int r) {
    if (r < 1 || r > kBlockCoeffs)
        throw Error("retention count must be in [1, 256]");
    Mat16 y = transform_block(spec, block);
    const auto& scan = zigzag_scan();
    for (int k = r; k < kBlockCoeffs; k++) y[scan[k][0]][scan[k][1]] = 0.0;
    return inverse_block(spec, y);
}

namespace {

void compress_one_block(const TransformSpec& spec, const ImagePlane& img,
                        ImagePlane& out, int r, int by, int bx) {
    Mat16 block;
    for (int y = 0; y < kN; y++)
        for (int x = 0; x < kN; x++)
            block[y][x] = img.at(by * kN + y, bx * kN + x);
    const Mat16 rec = compress_block(spec, block, r);
    for (int y = 0; y < kN; y++)
        for (int x = 0; x < kN; x++)
            out.at(by * kN + y, bx * kN + x) = quantize(rec[y][x]);
}

ImagePlane compress_image_impl(const TransformSpec& spec, const ImagePlane& img,
                               int r, bool parallel) {
    if (img.width % kN != 0 || img.height % kN != 0)
        throw BadGeometry("image dimensions must be multiples of 16");
    if (r < 1 || r > kBlockCoeffs)
        throw Error("retention count must be in [1, 256]");
    if (!spec.orthogonal)
        throw NotInvertibleAsTranspose(std::string(to_string(spec.name)) +
                                       ": scaled kernel is not orthogonal");

    ImagePlane out;
    out.width = img.width;
    out.height = img.height;
    out.pixels.resize(img.pixels.size());

    const int bw = img.width / kN;
    const int bh = img.height / kN;
    const int blocks = bw * bh;
#pragma omp parallel for schedule(static) if (parallel)
    for (int b = 0; b < blocks; b++)
        compress_one_block(spec, img, out, r, b / bw, b % bw);
    return out;
}

}  // namespace

ImagePlane compress_image(const TransformSpec& spec, const ImagePlane& img, int r) {
    return compress_image_impl(spec, img, r, true);
}

ImagePlane compress_image_serial(const TransformSpec& spec, const ImagePlane& img,
                                 int r) {
    return compress_image_impl(spec, img, r, false);
}

double mse(const ImagePlane& a, const ImagePlane& b) {
    check_same_shape(a, b, "mse");
    std::uint64_t sse = 0;
    for (std::size_t i = 0; i < a.pixels.size(); i++) {
        const int d = int(a.pixels[i]) - int(b.pixels[i]);
        sse += std::uint64_t(d * d);
    }
    return double(sse) / double(a.pixels.size());
}

double psnr(const ImagePlane& a, const ImagePlane& b) { return metric_psnr(mse(a, b)); }

double uqi(const ImagePlane& a, const ImagePlane& b) {
    check_same_shape(a, b, "uqi");
    constexpr int kWin = 8;
    constexpr std::int64_t kArea = kWin * kWin;
    if (a.width < kWin || a.height < kWin)
        throw BadGeometry("uqi: plane smaller than the 8x8 window");

    // summed-area tables over x, y, x^2, y^2, xy with a zero border
    const int sw = a.width + 1;
    const std::size_t cells = std::size_t(sw) * (a.height + 1);
    std::vector<std::uint64_t> sx(cells, 0), sy(cells, 0), sxx(cells, 0),
        syy(cells, 0), sxy(cells, 0);
    for (int i = 0; i < a.height; i++) {
        for (int j = 0; j < a.width; j++) {
            const std::size_t at = std::size_t(i + 1) * sw + (j + 1);
            const std::size_t up = at - sw, left = at - 1, diag = up - 1;
            const std::uint64_t px = a.at(i, j), py = b.at(i, j);
            sx[at] = sx[up] + sx[left] - sx[diag] + px;
            sy[at] = sy[up] + sy[left] - sy[diag] + py;
            sxx[at] = sxx[up] + sxx[left] - sxx[diag] + px * px;
            syy[at] = syy[up] + syy[left] - syy[diag] + py * py;
            sxy[at] = sxy[up] + sxy[left] - sxy[diag] + px * py;
        }
    }

    auto window = [&](const std::vector<std::uint64_t>& t, int i, int j) {
        return std::int64_t(t[std::size_t(i + kWin) * sw + (j + kWin)] -
                            t[std::size_t(i) * sw + (j + kWin)] -
                            t[std::size_t(i + kWin) * sw + j] +
                            t[std::size_t(i) * sw + j]);
    };

    double acc = 0.0;
    std::int64_t used = 0;
    for (int i = 0; i + kWin <= a.height; i++) {
        for (int j = 0; j + kWin <= a.width; j++) {
            const std::int64_t wx = window(sx, i, j), wy = window(sy, i, j);
            const std::int64_t vx = kArea * window(sxx, i, j) - wx * wx;
            const std::int64_t vy = kArea * window(syy, i, j) - wy * wy;
            const std::int64_t cov = kArea * window(sxy, i, j) - wx * wy;
            const std::int64_t f1 = vx + vy;      // variance factor
            const std::int64_t f2 = wx * wx + wy * wy;  // luminance factor
            if (f1 == 0 && f2 == 0) {
                // both windows are flat zero; identical by construction
                acc += 1.0;
                used++;
            } else if (f1 == 0 || f2 == 0) {
                continue;  // standard limit convention: leave it out
            } else {
                acc += double(4 * cov * wx * wy) / (double(f1) * double(f2));
                used++;
            }
        }
    }
    if (used == 0) return a.pixels == b.pixels ? 1.0 : 0.0;
    return acc / double(used);
}

ImagePlane diff_image(const ImagePlane& a, const ImagePlane& b) {
    check_same_shape(a, b, "diff_image");
    ImagePlane out;
    out.width = a.width;
    out.height = a.height;
    out.pixels.resize(a.pixels.size());
    for (std::size_t i = 0; i < a.pixels.size(); i++) {
        const int d = 2 * std::abs(int(a.pixels[i]) - int(b.pixels[i]));
        out.pixels[i] = std::uint8_t(std::min(d, 255));
    }
    return out;
}

QualityReport sweep(const std::vector<TransformSpec>& specs,
                    const std::vector<std::pair<std::string, ImagePlane>>& corpus,
                    const std::vector<int>& r_values, bool parallel) {
    if (specs.empty()) throw Error("sweep: no transforms given");
    if (corpus.empty()) throw Error("sweep: empty corpus");
    if (r_values.empty()) throw Error("sweep: no retention values given");
    for (const auto& [name, img] : corpus)
        if (img.width % kN != 0 || img.height % kN != 0)
            throw BadGeometry(name + ": dimensions must be multiples of 16");
    for (const int r : r_values)
        if (r < 1 || r > kBlockCoeffs) throw Error("retention count must be in [1, 256]");
    for (const TransformSpec& s : specs)
        if (!s.orthogonal)
            throw NotInvertibleAsTranspose(std::string(to_string(s.name)) +
                                           ": scaled kernel is not orthogonal");

    const int ns = int(specs.size());
    const int nr = int(r_values.size());
    const int ni = int(corpus.size());

    QualityReport rep;
    rep.num_images = ni;
    rep.cells.resize(std::size_t(ns) * nr);
    for (int s = 0; s < ns; s++) {
        for (int ri = 0; ri < nr; ri++) {
            SweepCell& cell = rep.cells[std::size_t(s) * nr + ri];
            cell.transform = specs[s].name;
            cell.r = r_values[ri];
            cell.per_image.resize(ni);
        }
    }

    const std::int64_t jobs = std::int64_t(ns) * nr * ni;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t t = 0; t < jobs; t++) {
        const int s = int(t / (std::int64_t(nr) * ni));
        const int ri = int((t / ni) % nr);
        const int ii = int(t % ni);
        const auto& [name, img] = corpus[ii];

        const ImagePlane rec = compress_image_serial(specs[s], img, r_values[ri]);
        ImageMetrics m;
        m.image = name;
        m.mse = mse(img, rec);
        m.psnr_db = metric_psnr(m.mse);
        m.uqi = uqi(img, rec);
        rep.cells[std::size_t(s) * nr + ri].per_image[ii] = std::move(m);
    }

    for (SweepCell& cell : rep.cells) {
        double p = 0.0, e = 0.0, q = 0.0;
        for (const ImageMetrics& m : cell.per_image) {
            p += m.psnr_db;
            e += m.mse;
            q += m.uqi;
        }
        cell.avg_psnr_db = p / ni;
        cell.avg_mse = e / ni;
        cell.avg_uqi = q / ni;
    }

    int dct_at = -1;
    for (int s = 0; s < ns && dct_at < 0; s++)
        if (specs[s].name == TransformName::Dct) dct_at = s;
    if (dct_at >= 0) {
        for (int s = 0; s < ns; s++) {
            for (int ri = 0; ri < nr; ri++) {
                SweepCell& cell = rep.cells[std::size_t(s) * nr + ri];
                const SweepCell& ref = rep.cells[std::size_t(dct_at) * nr + ri];
                cell.has_diff = true;
                cell.psnr_diff_vs_dct_db = gap(cell.avg_psnr_db, ref.avg_psnr_db);
                cell.mse_diff_vs_dct = gap(cell.avg_mse, ref.avg_mse);
                cell.uqi_diff_vs_dct = gap(cell.avg_uqi, ref.avg_uqi);
            }
        }
    }
    return rep;
}

}  // namespace approxdct
