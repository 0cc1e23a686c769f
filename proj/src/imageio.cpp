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

#include "approxdct/imageio.hpp"

#include <fstream>
#include <limits>

#include "approxdct/errors.hpp"

namespace approxdct {

namespace {

// Next header token: skips whitespace and '#' comments running to
// end of line.
int read_header_int(std::istream& in, const std::string& path) {
    for (;;) {
        const int c = in.peek();
        if (c == std::char_traits<char>::eof())
            throw BadFormat(path + ": truncated PGM header");
        if (c == '#') {
            in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
            continue;
        }
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        break;
    }
    int value = 0;
    if (!(in >> value)) throw BadFormat(path + ": non-numeric PGM header field");
    return value;
}

}  // namespace

ImagePlane load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadFormat(path + ": cannot open");

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '5')
        throw BadFormat(path + ": not a binary PGM (P5) file");

    ImagePlane img;
    img.width = read_header_int(in, path);
    img.height = read_header_int(in, path);
    const int maxval = read_header_int(in, path);

    if (img.width <= 0 || img.height <= 0)
        throw BadFormat(path + ": non-positive dimensions");
    if (maxval != 255)
        throw UnsupportedDepth(path + ": only maxval 255 is supported");

    // exactly one whitespace byte separates the header from the raster
    const int sep = in.get();
    if (sep == std::char_traits<char>::eof() || !std::isspace(sep))
        throw BadFormat(path + ": missing raster separator");

    img.pixels.resize(std::size_t(img.width) * img.height);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            std::streamsize(img.pixels.size()));
    if (std::size_t(in.gcount()) != img.pixels.size())
        throw BadFormat(path + ": truncated raster");

    return img;
}

void save_pgm(const std::string& path, const ImagePlane& img) {
    if (img.width <= 0 || img.height <= 0 ||
        img.pixels.size() != std::size_t(img.width) * img.height)
        throw BadFormat(path + ": refusing to write inconsistent plane");

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw BadFormat(path + ": cannot open for writing");

    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              std::streamsize(img.pixels.size()));
    if (!out) throw BadFormat(path + ": short write");
}

}  // namespace approxdct
