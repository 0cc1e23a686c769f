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
#include <cstdint>

#include "approxdct/transforms.hpp"

namespace approxdct {

// Operation tally threaded through the integer pipelines. Additions include
// subtractions. The fast path must come out at exactly 72 per 16-point block
// and the direct product at 208, with no multiplications or shifts in either.
struct OpCounts {
    std::int64_t additions = 0;
    std::int64_t multiplications = 0;
    std::int64_t shifts = 0;

    void reset() { additions = multiplications = shifts = 0; }
};

// y = T x through the five-stage butterfly decomposition. Integer exact for
// any input whose growth fits an int64 lane (see analyze_bit_growth).
IVec16 fast_forward(const IVec16& x, OpCounts* counts = nullptr);

// y = T x as a plain row-by-row product, skipping zero weights. Kept as the
// reference the fast path is checked against.
IVec16 direct_forward(const IVec16& x, OpCounts* counts = nullptr);

// Stage tables of the factorization, exposed for tests and for the
// bit-growth analysis. stage[0] is applied to the input first; the last
// stage is the output permutation, also available as sigma.
struct Factorization {
    static constexpr int kStages = 5;

    std::array<IMat16, kStages> stage;

    // out[sigma[j]] = y[j] for pre-permutation lane j
    std::array<int, kN> sigma;

    // Sparse +/-1 term folded into each odd output lane after the shared
    // 3-term combinations: lane 8+i picks up sign[i] * w[8 + col[i]].
    std::array<int, 8> correction_col;
    std::array<int, 8> correction_sign;
};

// Builds the stage tables once, derives the odd-lane correction, and checks
// that the product of all stages reproduces the kernel exactly. Throws
// FactorizationInconsistent if anything disagrees.
const Factorization& factorization();

// Worst-case lane magnitudes per stage when inputs are W-bit unsigned
// samples, with the signed width those bounds imply and an input that
// attains the final bound.
struct BitGrowthReport {
    int input_bits = 0;

    // largest |lane| after each stage, permutation included
    std::array<std::int64_t, Factorization::kStages> stage_max{};

    std::int64_t output_max = 0;
    int signed_bits = 0;

    // separable 2-D application T X T^t of the same W-bit inputs
    std::int64_t output_max_2d = 0;
    int signed_bits_2d = 0;

    IVec16 witness{};
    int witness_lane = 0;
};

BitGrowthReport analyze_bit_growth(int input_bits);

}  // namespace approxdct
