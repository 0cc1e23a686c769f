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

#ifndef APPROXDCT_TRANSFORMS_HPP
#define APPROXDCT_TRANSFORMS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace approxdct {

inline constexpr int kN = 16;

using Vec16 = std::array<double, kN>;
using IVec16 = std::array<std::int64_t, kN>;
using Mat16 = std::array<Vec16, kN>;
using IMat16 = std::array<std::array<std::int8_t, kN>, kN>;

enum class TransformName { Proposed, Dct, Wht, Bas2010 };

const char* to_string(TransformName name);

// A named 16x16 transform: kernel matrix plus per-row scaling diagonal.
// Integer kernels (proposed, WHT, BAS-2010) keep their entries in `ikernel`
// so downstream code can run the kernel product in exact integer arithmetic;
// the exact DCT lives in `rkernel` with unit scaling.
struct TransformSpec {
    TransformName name;
    std::string label;
    bool integer_kernel = false;
    bool comparator_external = false;
    bool orthogonal = false;
    IMat16 ikernel{};
    Mat16 rkernel{};
    Vec16 scaling{};

    // kernel rows as doubles, before scaling
    Mat16 kernel() const;
    // scaling * kernel: the matrix actually applied to data
    Mat16 scaled() const;
};

TransformSpec build_proposed();
TransformSpec build_exact_dct();
TransformSpec build_wht();

// Loads the externally transcribed comparator: 16 lines of 16 integers
// followed by one line of 16 scaling reals. A missing file raises
// ComparatorUnavailable; a present but malformed file raises BadFormat.
TransformSpec build_bas2010(const std::string& path);

// Comparator path from the APPROXDCT_BAS_MATRIX environment variable.
std::optional<std::string> bas2010_path_from_env();

Vec16 apply_forward(const TransformSpec& spec, const Vec16& x);
Vec16 apply_inverse(const TransformSpec& spec, const Vec16& y);

}  // namespace approxdct

#endif
