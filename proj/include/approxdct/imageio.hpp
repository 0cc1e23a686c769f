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

#include <cstdint>
#include <string>
#include <vector>

namespace approxdct {

// 8-bit grayscale plane, row major.
struct ImagePlane {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t& at(int y, int x) { return pixels[std::size_t(y) * width + x]; }
    std::uint8_t at(int y, int x) const { return pixels[std::size_t(y) * width + x]; }
};

// Binary PGM (P5), maxval 255 only. Header comments are tolerated on input.
// Throws BadFormat on anything malformed and UnsupportedDepth when the
// maxval is not 255.
ImagePlane load_pgm(const std::string& path);

// Canonical P5 writer: "P5\n<w> <h>\n255\n" followed by the raw rows.
void save_pgm(const std::string& path, const ImagePlane& img);

}  // namespace approxdct
