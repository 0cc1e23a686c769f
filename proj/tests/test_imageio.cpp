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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "approxdct/errors.hpp"
#include "doctest.h"

using namespace approxdct;

namespace {

struct TempPgm {
    std::string path;
    explicit TempPgm(const std::string& bytes) {
        path = (std::filesystem::temp_directory_path() / "approxdct_io_test.pgm").string();
        std::ofstream f(path, std::ios::binary);
        f.write(bytes.data(), std::streamsize(bytes.size()));
    }
    ~TempPgm() { std::remove(path.c_str()); }
};

std::string read_all(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("round trip through the canonical writer") {
    ImagePlane img;
    img.width = 48;
    img.height = 32;
    img.pixels.resize(48 * 32);
    for (int y = 0; y < img.height; y++)
        for (int x = 0; x < img.width; x++) img.at(y, x) = std::uint8_t((y * 7 + x * 13) & 0xff);

    TempPgm tmp("");
    save_pgm(tmp.path, img);
    const ImagePlane back = load_pgm(tmp.path);
    CHECK(back.width == 48);
    CHECK(back.height == 32);
    CHECK(back.pixels == img.pixels);
}

TEST_CASE("writer emits the canonical header") {
    ImagePlane img;
    img.width = 4;
    img.height = 2;
    img.pixels.assign(8, 200);
    TempPgm tmp("");
    save_pgm(tmp.path, img);
    const std::string bytes = read_all(tmp.path);
    CHECK(bytes.size() == 11 + 8);
    CHECK(bytes.rfind("P5\n4 2\n255\n", 0) == 0);
    for (std::size_t i = 11; i < bytes.size(); i++) CHECK(std::uint8_t(bytes[i]) == 200);
}

TEST_CASE("header comments are tolerated on input") {
    TempPgm tmp(std::string("P5\n# hello\n4 2\n# another\n255\n") + std::string(8, char(9)));
    const ImagePlane img = load_pgm(tmp.path);
    CHECK(img.width == 4);
    CHECK(img.height == 2);
    for (std::uint8_t p : img.pixels) CHECK(p == 9);
}

TEST_CASE("ascii pgm is rejected") {
    TempPgm tmp("P2\n4 2\n255\n0 1 2 3 4 5 6 7\n");
    CHECK_THROWS_AS(load_pgm(tmp.path), BadFormat);
}

TEST_CASE("sixteen bit depth is rejected") {
    TempPgm tmp(std::string("P5\n4 2\n65535\n") + std::string(16, '\0'));
    CHECK_THROWS_AS(load_pgm(tmp.path), UnsupportedDepth);
}

TEST_CASE("truncated raster is rejected") {
    TempPgm tmp(std::string("P5\n4 2\n255\n") + std::string(7, '\0'));
    CHECK_THROWS_AS(load_pgm(tmp.path), BadFormat);
}

TEST_CASE("garbage header is rejected") {
    TempPgm tmp("P5\nfour two\n255\n");
    CHECK_THROWS_AS(load_pgm(tmp.path), BadFormat);
}

TEST_CASE("non positive dimensions are rejected") {
    TempPgm tmp(std::string("P5\n0 2\n255\n"));
    CHECK_THROWS_AS(load_pgm(tmp.path), BadFormat);
}

TEST_CASE("missing file is rejected") {
    CHECK_THROWS_AS(load_pgm("/nonexistent/approxdct/nowhere.pgm"), BadFormat);
}
