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

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "approxdct/codec.hpp"
#include "approxdct/fastdct.hpp"
#include "approxdct/imageio.hpp"
#include "approxdct/spectral.hpp"

using namespace approxdct;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// fast butterfly pipeline vs plain row products, 1-D blocks
void bench_kernel() {
    constexpr int kReps = 2'000'000;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(0, 255);
    std::vector<IVec16> inputs(4096);
    for (IVec16& x : inputs)
        for (auto& v : x) v = dist(rng);

    std::int64_t sink = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < kReps; i++) sink += fast_forward(inputs[i & 4095])[5];
    const double tf = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < kReps; i++) sink += direct_forward(inputs[i & 4095])[5];
    const double td = seconds_since(t0);

    std::printf("kernel: fast %.1f ns/block, direct %.1f ns/block, speedup %.2fx (sink %lld)\n",
                tf / kReps * 1e9, td / kReps * 1e9, td / tf, (long long)sink);
}

// OpenMP block loop vs the serial reference on one image
void bench_image(const ImagePlane& img) {
    const TransformSpec spec = build_proposed();

    auto t0 = std::chrono::steady_clock::now();
    const ImagePlane par = compress_image(spec, img, 64);
    const double tp = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const ImagePlane ser = compress_image_serial(spec, img, 64);
    const double ts = seconds_since(t0);

    std::printf("image r=64: parallel %.1f ms, serial %.1f ms, speedup %.2fx, identical %s\n",
                tp * 1e3, ts * 1e3, ts / tp, par.pixels == ser.pixels ? "yes" : "NO");
}

// spectral table, OpenMP rows vs serial rows
void bench_spectral() {
    const TransformSpec dct = build_exact_dct();
    const TransformSpec prop = build_proposed();

    auto t0 = std::chrono::steady_clock::now();
    SpectralReport par{};
    for (int i = 0; i < 50; i++) par = full_report(prop, dct, true);
    const double tp = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    SpectralReport ser{};
    for (int i = 0; i < 50; i++) ser = full_report(prop, dct, false);
    const double ts = seconds_since(t0);

    std::printf("spectral: parallel %.2f ms, serial %.2f ms, speedup %.2fx, identical %s\n",
                tp / 50 * 1e3, ts / 50 * 1e3, ts / tp,
                par.total == ser.total ? "yes" : "NO");
}

}  // namespace

int main() {
    bench_kernel();
    bench_spectral();

    const std::string corpus = APPROXDCT_CORPUS_DIR;
    const ImagePlane img = load_pgm(corpus + "/ridge.pgm");
    bench_image(img);

    // sweep path: OpenMP jobs vs fully serial evaluation
    std::vector<std::pair<std::string, ImagePlane>> one = {{"ridge", img}};
    std::vector<TransformSpec> specs = {build_proposed(), build_exact_dct()};
    const std::vector<int> rs = {16, 64, 192};

    auto t0 = std::chrono::steady_clock::now();
    const QualityReport par = sweep(specs, one, rs, true);
    const double tp = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const QualityReport ser = sweep(specs, one, rs, false);
    const double ts = seconds_since(t0);

    bool same = true;
    for (std::size_t i = 0; i < par.cells.size(); i++)
        same = same && par.cells[i].avg_psnr_db == ser.cells[i].avg_psnr_db &&
               par.cells[i].avg_mse == ser.cells[i].avg_mse &&
               par.cells[i].avg_uqi == ser.cells[i].avg_uqi;
    std::printf("sweep: parallel %.1f ms, serial %.1f ms, speedup %.2fx, identical %s\n",
                tp * 1e3, ts * 1e3, ts / tp, same ? "yes" : "NO");
    return 0;
}
