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

#include "approxdct/errors.hpp"

namespace approxdct {

namespace {

// Dense 4x4 block feeding output lanes 4, 12, 6, 14 (pre-permutation 4..7).
constexpr std::int8_t kE[4][4] = {
    {0, 1, 1, 1},
    {-1, -1, 0, 1},
    {1, 0, -1, 1},
    {-1, 1, -1, 0},
};

// Dense 8x8 block on the odd half. Never applied as-is: it splits into
// pair butterflies, the 3-term rows of kM and one leftover term per lane.
constexpr std::int8_t kO[8][8] = {
    {1, 1, 0, 1, 1, 1, 1, 1},
    {-1, -1, -1, -1, 0, 1, 1, 1},
    {0, 1, 1, -1, -1, -1, 1, 1},
    {-1, -1, 1, 1, 1, -1, 0, 1},
    {1, 0, -1, -1, 1, -1, -1, 1},
    {-1, 1, 1, -1, 1, 1, -1, 0},
    {1, -1, 1, 0, -1, 1, -1, 1},
    {-1, 1, -1, 1, -1, 0, -1, 1},
};

constexpr std::int8_t kM[8][8] = {
    {1, 0, 0, 0, 1, 0, 1, 0},
    {-1, 0, -1, 0, 0, 0, 1, 0},
    {0, 0, 0, 1, -1, 0, 1, 0},
    {-1, 0, 1, 0, 0, 1, 0, 0},
    {0, 0, -1, 0, 0, 1, 0, -1},
    {0, -1, 0, 1, 1, 0, 0, 0},
    {0, 1, 0, 0, 0, -1, 0, -1},
    {0, -1, 0, -1, 0, 0, 0, -1},
};

constexpr int kSigma[kN] = {0, 8, 4, 12, 2, 6, 10, 14, 1, 3, 5, 7, 9, 11, 13, 15};

// Accumulates a sparse +/-1 row. The first term is a plain (possibly
// negated) load; every further term costs one addition.
std::int64_t apply_row(const std::int8_t* row, const std::int64_t* v, int n,
                       OpCounts& c) {
    std::int64_t acc = 0;
    int terms = 0;
    for (int j = 0; j < n; j++) {
        if (row[j] > 0)
            acc += v[j];
        else if (row[j] < 0)
            acc -= v[j];
        else
            continue;

        terms++;
    }

    if (terms > 1) c.additions += terms - 1;
    return acc;
}

Factorization build() {
    Factorization f{};

    for (int j = 0; j < kN; j++) f.sigma[j] = kSigma[j];

    // stage 1: length-16 butterfly
    IMat16 s0{};
    for (int i = 0; i < 8; i++) {
        s0[i][i] = 1;
        s0[i][15 - i] = 1;
        s0[8 + i][7 - i] = 1;
        s0[8 + i][8 + i] = -1;
    }

    // stage 2: length-8 butterfly on the even half
    IMat16 s1{};
    for (int i = 0; i < 4; i++) {
        s1[i][i] = 1;
        s1[i][7 - i] = 1;
        s1[4 + i][3 - i] = 1;
        s1[4 + i][4 + i] = -1;
    }
    for (int i = 8; i < kN; i++) s1[i][i] = 1;

    // stage 3: length-4 butterfly on the top quarter
    IMat16 s2{};
    s2[0][0] = 1;
    s2[0][3] = 1;
    s2[1][1] = 1;
    s2[1][2] = 1;
    s2[2][1] = 1;
    s2[2][2] = -1;
    s2[3][0] = 1;
    s2[3][3] = -1;
    for (int i = 4; i < kN; i++) s2[i][i] = 1;

    // stage 4: two 2-point blocks, then the dense even and odd blocks
    IMat16 s3{};
    s3[0][0] = 1;
    s3[0][1] = 1;
    s3[1][0] = 1;
    s3[1][1] = -1;
    s3[2][2] = 1;
    s3[2][3] = 1;
    s3[3][2] = -1;
    s3[3][3] = 1;
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) s3[4 + i][4 + j] = kE[i][j];
    for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++) s3[8 + i][8 + j] = kO[i][j];

    // stage 5: reorder into frequency order
    IMat16 s4{};
    for (int j = 0; j < kN; j++) s4[kSigma[j]][j] = 1;

    f.stage = {s0, s1, s2, s3, s4};

    // Split the odd block: subtract the pair butterflies recombined by kM
    // from kO and demand that exactly one +/-1 term per lane is left over.
    for (int i = 0; i < 8; i++) {
        int found = 0;
        for (int j = 0; j < 8; j++) {
            int mg = 0;
            for (int k = 0; k < 8; k++) {
                if (k / 2 != j / 2) continue;
                const int gkj = (k % 2 == 0 || j % 2 == 0) ? 1 : -1;
                mg += kM[i][k] * gkj;
            }
            const int r = kO[i][j] - mg;
            if (r == 0) continue;
            if (r != 1 && r != -1)
                throw FactorizationInconsistent(
                    "odd-block residue has a term larger than +/-1");
            f.correction_col[i] = j;
            f.correction_sign[i] = r;
            found++;
        }
        if (found != 1)
            throw FactorizationInconsistent(
                "odd-block residue must leave exactly one term per lane");
    }

    // Multiply the stages back together and demand the kernel, entry for entry.
    std::array<std::array<int, kN>, kN> prod{};
    for (int i = 0; i < kN; i++) prod[i][i] = 1;
    for (const IMat16& s : f.stage) {
        std::array<std::array<int, kN>, kN> next{};
        for (int i = 0; i < kN; i++) {
            for (int k = 0; k < kN; k++) {
                if (s[i][k] == 0) continue;
                for (int j = 0; j < kN; j++) next[i][j] += s[i][k] * prod[k][j];
            }
        }
        prod = next;
    }

    const IMat16 kernel = build_proposed().ikernel;
    for (int i = 0; i < kN; i++)
        for (int j = 0; j < kN; j++)
            if (prod[i][j] != kernel[i][j])
                throw FactorizationInconsistent(
                    "stage product does not reproduce the kernel");

    return f;
}

// Smallest two's-complement width covering [-neg, pos].
int width_for(std::int64_t pos, std::int64_t neg) {
    for (int b = 1; b < 63; b++) {
        const std::int64_t half = std::int64_t(1) << (b - 1);
        if (pos <= half - 1 && neg <= half) return b;
    }
    return 63;
}

}  // namespace

const Factorization& factorization() {
    static const Factorization f = build();
    return f;
}

IVec16 fast_forward(const IVec16& x, OpCounts* counts) {
    const Factorization& f = factorization();
    OpCounts scratch;
    OpCounts& c = counts != nullptr ? *counts : scratch;

    std::int64_t u[16];
    for (int i = 0; i < 8; i++) {
        u[i] = x[i] + x[15 - i];
        u[8 + i] = x[7 - i] - x[8 + i];
    }
    c.additions += 16;

    std::int64_t v[8];
    for (int i = 0; i < 4; i++) {
        v[i] = u[i] + u[7 - i];
        v[4 + i] = u[3 - i] - u[4 + i];
    }
    c.additions += 8;

    const std::int64_t w0 = v[0] + v[3];
    const std::int64_t w1 = v[1] + v[2];
    const std::int64_t w2 = v[1] - v[2];
    const std::int64_t w3 = v[0] - v[3];
    c.additions += 4;

    std::int64_t y[16];
    y[0] = w0 + w1;
    y[1] = w0 - w1;
    y[2] = w2 + w3;
    y[3] = w3 - w2;
    c.additions += 4;

    for (int i = 0; i < 4; i++) y[4 + i] = apply_row(kE[i], v + 4, 4, c);

    // odd half: lanes 8..15 pass through stages 2 and 3 untouched
    std::int64_t g[8];
    for (int i = 0; i < 4; i++) {
        g[2 * i] = u[8 + 2 * i] + u[9 + 2 * i];
        g[2 * i + 1] = u[8 + 2 * i] - u[9 + 2 * i];
    }
    c.additions += 8;

    for (int i = 0; i < 8; i++) {
        const std::int64_t t = apply_row(kM[i], g, 8, c);
        const std::int64_t s = u[8 + f.correction_col[i]];
        y[8 + i] = f.correction_sign[i] > 0 ? t + s : t - s;
        c.additions += 1;
    }

    IVec16 out{};
    for (int j = 0; j < kN; j++) out[f.sigma[j]] = y[j];
    return out;
}

IVec16 direct_forward(const IVec16& x, OpCounts* counts) {
    static const IMat16 kT = build_proposed().ikernel;
    OpCounts scratch;
    OpCounts& c = counts != nullptr ? *counts : scratch;

    IVec16 y{};
    for (int i = 0; i < kN; i++) y[i] = apply_row(kT[i].data(), x.data(), kN, c);
    return y;
}

BitGrowthReport analyze_bit_growth(int input_bits) {
    if (input_bits < 1 || input_bits > 48)
        throw ArithmeticOverflow("input bit width outside the supported 1..48 range");

    const Factorization& f = factorization();
    const std::int64_t top = (std::int64_t(1) << input_bits) - 1;

    BitGrowthReport rep;
    rep.input_bits = input_bits;

    // Exact per-lane interval analysis: with inputs confined to [0, top],
    // the extrema of each lane come straight from the signed row sums of
    // the cumulative stage product.
    std::array<std::array<std::int64_t, kN>, kN> cum{};
    for (int i = 0; i < kN; i++) cum[i][i] = 1;

    for (int s = 0; s < Factorization::kStages; s++) {
        std::array<std::array<std::int64_t, kN>, kN> next{};
        for (int i = 0; i < kN; i++) {
            for (int k = 0; k < kN; k++) {
                if (f.stage[s][i][k] == 0) continue;
                for (int j = 0; j < kN; j++) next[i][j] += f.stage[s][i][k] * cum[k][j];
            }
        }
        cum = next;

        std::int64_t worst = 0;
        for (int i = 0; i < kN; i++) {
            std::int64_t pos = 0, neg = 0;
            for (int j = 0; j < kN; j++) {
                if (cum[i][j] > 0)
                    pos += cum[i][j];
                else
                    neg -= cum[i][j];
            }
            worst = std::max(worst, std::max(pos, neg));
        }
        rep.stage_max[s] = worst * top;
    }
    rep.output_max = rep.stage_max[Factorization::kStages - 1];

    std::array<std::int64_t, kN> pos{}, neg{};
    for (int i = 0; i < kN; i++) {
        for (int j = 0; j < kN; j++) {
            if (cum[i][j] > 0)
                pos[i] += cum[i][j];
            else
                neg[i] -= cum[i][j];
        }
    }

    std::int64_t pos_peak = *std::max_element(pos.begin(), pos.end());
    std::int64_t neg_peak = *std::max_element(neg.begin(), neg.end());
    rep.signed_bits = width_for(pos_peak * top, neg_peak * top);

    // witness: drive every tap of the worst row's dominant sign to full scale
    std::int64_t best = -1;
    int lane = 0, side = 1;
    for (int i = 0; i < kN; i++) {
        if (pos[i] > best) {
            best = pos[i];
            lane = i;
            side = 1;
        }
        if (neg[i] > best) {
            best = neg[i];
            lane = i;
            side = -1;
        }
    }
    rep.witness_lane = lane;
    for (int j = 0; j < kN; j++) {
        const bool hit = side > 0 ? cum[lane][j] > 0 : cum[lane][j] < 0;
        rep.witness[j] = hit ? top : 0;
    }

    // Separable 2-D pass: the (i, k) output of T X T^t over the same input
    // box peaks at top * (pos_i pos_k + neg_i neg_k) and dips symmetrically.
    std::int64_t p2 = 0, n2 = 0;
    for (int i = 0; i < kN; i++) {
        for (int k = 0; k < kN; k++) {
            p2 = std::max(p2, pos[i] * pos[k] + neg[i] * neg[k]);
            n2 = std::max(n2, pos[i] * neg[k] + neg[i] * pos[k]);
        }
    }
    rep.output_max_2d = std::max(p2, n2) * top;
    rep.signed_bits_2d = width_for(p2 * top, n2 * top);

    return rep;
}

}  // namespace approxdct
