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

#include <iosfwd>
#include <string>
#include <vector>

#include "approxdct/transforms.hpp"

namespace approxdct::cli {

// "a:b:step" -> {a, a+step, ..., <= b}; bounds clamped to [1, 256], step >= 1.
std::vector<int> parse_r_range(const std::string& text);

// Registry lookup for --transform values: proposed | dct | wht | bas2010.
// bas2010 needs a matrix path (flag value, or the APPROXDCT_BAS_MATRIX
// fallback); ComparatorUnavailable if neither is set.
TransformSpec make_spec(const std::string& name, const std::string& bas_path);

// Numeric rendering shared by every CSV and report writer: fixed two
// decimals for the error-energy table view, 12 significant digits
// elsewhere, infinities spelled "inf"/"-inf".
std::string fmt_table(double v);
std::string fmt_full(double v);

// Factorization, adder-count, orthogonality and Parseval checks. Prints one
// line per check plus the final counts line; returns 0 only if every check
// passed (absent comparator matrix reports SKIPPED, which still passes).
int cmd_verify(const std::string& bas_path, std::ostream& out);

// Error-energy table CSV at out_path plus one D_m curve CSV per analyzed
// transform at <stem>_curves_<transform>.csv.
int cmd_analyze(int grid, const std::string& out_path, const std::string& bas_path,
                std::ostream& out);

// Round trip one image at retention r; writes the reconstruction, the
// optional x2 difference image, and prints "psnr mse uqi".
int cmd_compress(const std::string& transform, int r, const std::string& input,
                 const std::string& out_path, const std::string& diff_path,
                 const std::string& bas_path, std::ostream& out);

// Full factorial sweep over every *.pgm under corpus_dir (sorted by name).
// Per-image CSV at out_path, corpus averages at <stem>_avg.csv.
int cmd_sweep(const std::string& corpus_dir, const std::vector<int>& r_values,
              const std::string& out_path, const std::string& bas_path,
              std::ostream& out);

// Worst-case growth report for W-bit unsigned inputs.
int cmd_bitwidth(int input_bits, std::ostream& out);

}  // namespace approxdct::cli
