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

#include "approxdct/fastdct.hpp"

#include <algorithm>
#include <random>

#include "approxdct/errors.hpp"
#include "doctest.h"

using namespace approxdct;

TEST_CASE("fast pipeline equals direct products on the basis") {
    for (int k = 0; k < kN; k++) {
        IVec16 e{};
        e[k] = 1;
        CHECK(fast_forward(e) == direct_forward(e));
    }
}

TEST_CASE("fast pipeline equals direct products on random vectors") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::int64_t> dist(-(1 << 16), (1 << 16) - 1);
    for (int t = 0; t < 10000; t++) {
        IVec16 x{};
        for (auto& v : x) v = dist(rng);
        REQUIRE(fast_forward(x) == direct_forward(x));
    }
}

TEST_CASE("instrumented operation counts") {
    IVec16 x{};
    for (int i = 0; i < kN; i++) x[i] = 3 * i - 20;

    OpCounts fast, direct;
    fast_forward(x, &fast);
    direct_forward(x, &direct);

    CHECK(fast.additions == 72);
    CHECK(fast.multiplications == 0);
    CHECK(fast.shifts == 0);
    CHECK(direct.additions == 208);
    CHECK(direct.multiplications == 0);
    CHECK(direct.shifts == 0);

    // counters accumulate across calls until reset
    fast_forward(x, &fast);
    CHECK(fast.additions == 144);
    fast.reset();
    CHECK(fast.additions == 0);
}

TEST_CASE("factorization tables") {
    const Factorization& f = factorization();

    // sigma is a permutation
    std::array<int, kN> seen{};
    for (int j = 0; j < kN; j++) {
        REQUIRE(f.sigma[j] >= 0);
        REQUIRE(f.sigma[j] < kN);
        seen[f.sigma[j]]++;
    }
    for (int i = 0; i < kN; i++) CHECK(seen[i] == 1);

    // derived odd-lane correction: one +/-1 term per lane, distinct columns
    static const int kCol[8] = {3, 5, 1, 7, 0, 6, 2, 4};
    static const int kSign[8] = {1, 1, 1, 1, 1, -1, 1, -1};
    for (int i = 0; i < 8; i++) {
        CHECK(f.correction_col[i] == kCol[i]);
        CHECK(f.correction_sign[i] == kSign[i]);
    }

    // every stage entry stays in {-1, 0, 1}
    for (const IMat16& s : f.stage)
        for (int i = 0; i < kN; i++)
            for (int j = 0; j < kN; j++) {
                CHECK(s[i][j] >= -1);
                CHECK(s[i][j] <= 1);
            }
}

TEST_CASE("bit growth for 8-bit input") {
    const BitGrowthReport rep = analyze_bit_growth(8);
    CHECK(rep.input_bits == 8);
    CHECK(rep.stage_max[0] == 510);
    CHECK(rep.stage_max[1] == 1020);
    CHECK(rep.stage_max[2] == 2040);
    CHECK(rep.stage_max[3] == 4080);
    CHECK(rep.stage_max[4] == 4080);
    CHECK(rep.output_max == 4080);
    CHECK(rep.signed_bits == 13);
    CHECK(rep.output_max_2d == 65280);
    CHECK(rep.signed_bits_2d == 17);

    // the witness really attains the bound
    const IVec16 peak = fast_forward(rep.witness);
    CHECK(std::abs(peak[rep.witness_lane]) == rep.output_max);
    for (const std::int64_t v : rep.witness) {
        CHECK(v >= 0);
        CHECK(v <= 255);
    }
}

TEST_CASE("bit growth widths follow input width") {
    for (int w = 1; w <= 16; w++) {
        const BitGrowthReport rep = analyze_bit_growth(w);
        CHECK(rep.signed_bits == w + 5);
        CHECK(rep.signed_bits_2d == w + 9);
        CHECK(rep.output_max == 16 * ((std::int64_t(1) << w) - 1));
    }
}

TEST_CASE("random 8-bit inputs stay inside the reported bound") {
    const BitGrowthReport rep = analyze_bit_growth(8);
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<std::int64_t> dist(0, 255);
    for (int t = 0; t < 2000; t++) {
        IVec16 x{};
        for (auto& v : x) v = dist(rng);
        const IVec16 y = fast_forward(x);
        for (const std::int64_t v : y) CHECK(std::abs(v) <= rep.output_max);
    }
}

TEST_CASE("bit growth rejects unusable widths") {
    CHECK_THROWS_AS(analyze_bit_growth(0), ArithmeticOverflow);
    CHECK_THROWS_AS(analyze_bit_growth(-3), ArithmeticOverflow);
    CHECK_THROWS_AS(analyze_bit_growth(49), ArithmeticOverflow);
}

TEST_CASE("linearity of the integer pipeline") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
    IVec16 a{}, b{}, sum{};
    for (int i = 0; i < kN; i++) {
        a[i] = dist(rng);
        b[i] = dist(rng);
        sum[i] = a[i] + b[i];
    }
    const IVec16 ya = fast_forward(a), yb = fast_forward(b), ys = fast_forward(sum);
    for (int i = 0; i < kN; i++) CHECK(ys[i] == ya[i] + yb[i]);
}
