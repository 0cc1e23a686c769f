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

#include "approxdct/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "approxdct/codec.hpp"
#include "approxdct/errors.hpp"
#include "approxdct/imageio.hpp"
#include "doctest.h"

using namespace approxdct;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "approxdct_cli_test";
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(bool(f));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(f, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

ImagePlane checkered(int w, int h) {
    ImagePlane img;
    img.width = w;
    img.height = h;
    img.pixels.resize(std::size_t(w) * h);
    for (int y = 0; y < h; y++)
        for (int x = 0; x < w; x++) img.at(y, x) = std::uint8_t(((x / 4 + y / 4) % 2) ? 200 : 40);
    return img;
}

// comparator file holding the shipped kernel with its true scalings; a
// stand-in that exercises the bas2010 plumbing end to end
void write_comparator(const std::string& path) {
    const TransformSpec p = build_proposed();
    std::ofstream f(path);
    for (int i = 0; i < kN; i++) {
        for (int j = 0; j < kN; j++) f << int(p.ikernel[i][j]) << ' ';
        f << '\n';
    }
    char buf[64];
    for (int i = 0; i < kN; i++) {
        std::snprintf(buf, sizeof buf, "%.17g\n", p.scaling[i]);
        f << buf;
    }
}

}  // namespace

TEST_CASE("parse_r_range accepts the documented forms") {
    const std::vector<int> full = cli::parse_r_range("2:256:2");
    REQUIRE(full.size() == 128);
    CHECK(full.front() == 2);
    CHECK(full.back() == 256);

    CHECK(cli::parse_r_range("1:1:1") == std::vector<int>{1});
    CHECK(cli::parse_r_range("10:20:5") == std::vector<int>{10, 15, 20});
    // upper bound not hit exactly
    CHECK(cli::parse_r_range("1:6:4") == std::vector<int>{1, 5});
}

TEST_CASE("parse_r_range rejects malformed input") {
    for (const char* bad : {"", "2:256", "0:256:2", "2:300:2", "2:256:0", "2:256:2x", "8:4:1"})
        CHECK_THROWS_AS(cli::parse_r_range(bad), Error);
}

TEST_CASE("numeric rendering") {
    CHECK(cli::fmt_table(8.080627283365169) == "8.08");
    CHECK(cli::fmt_table(92.563099745665994) == "92.56");
    CHECK(cli::fmt_table(0.0) == "0.00");
    CHECK(cli::fmt_full(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(cli::fmt_full(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(cli::fmt_full(0.5) == "0.5");
    CHECK(cli::fmt_full(0.0) == "0");
}

TEST_CASE("make_spec resolves the registry") {
    unsetenv("APPROXDCT_BAS_MATRIX");
    CHECK(cli::make_spec("proposed", "").name == TransformName::Proposed);
    CHECK(cli::make_spec("dct", "").name == TransformName::Dct);
    CHECK_FALSE(cli::make_spec("dct", "").integer_kernel);
    CHECK(cli::make_spec("wht", "").name == TransformName::Wht);
    CHECK_THROWS_AS(cli::make_spec("bas2010", ""), ComparatorUnavailable);
    CHECK_THROWS_AS(cli::make_spec("fft", ""), Error);

    TempDir tmp;
    const std::string bas = tmp.file("cmp.txt");
    write_comparator(bas);
    const TransformSpec spec = cli::make_spec("bas2010", bas);
    CHECK(spec.name == TransformName::Bas2010);
    CHECK(spec.orthogonal);
}

TEST_CASE("cmd_bitwidth reports the eight bit case") {
    std::ostringstream out;
    CHECK(cli::cmd_bitwidth(8, out) == 0);
    const std::string s = out.str();
    CHECK(s.find("input_bits=8\n") != std::string::npos);
    CHECK(s.find("stage1_max=510\n") != std::string::npos);
    CHECK(s.find("output_max=4080\n") != std::string::npos);
    CHECK(s.find("signed_bits=13\n") != std::string::npos);
    CHECK(s.find("output_max_2d=65280\n") != std::string::npos);
    CHECK(s.find("signed_bits_2d=17\n") != std::string::npos);
    CHECK(s.find("witness_lane=0\n") != std::string::npos);
    CHECK(s.find("witness=255,255,") != std::string::npos);
}

TEST_CASE("cmd_verify passes without a comparator") {
    unsetenv("APPROXDCT_BAS_MATRIX");
    std::ostringstream out;
    CHECK(cli::cmd_verify("", out) == 0);
    const std::string s = out.str();
    CHECK(s.find("factorization: PASS") != std::string::npos);
    CHECK(s.find("orthogonality: PASS") != std::string::npos);
    CHECK(s.find("parseval: PASS") != std::string::npos);
    CHECK(s.find("bas2010: SKIPPED (no matrix provided)") != std::string::npos);
    CHECK(s.find("additions(fast)=72 additions(direct)=208 mults=0 shifts=0 PASS") !=
          std::string::npos);
}

TEST_CASE("cmd_verify covers a provided comparator") {
    TempDir tmp;
    const std::string bas = tmp.file("cmp.txt");
    write_comparator(bas);
    std::ostringstream out;
    CHECK(cli::cmd_verify(bas, out) == 0);
    CHECK(out.str().find("bas2010: PASS") != std::string::npos);
}

TEST_CASE("cmd_analyze writes the table and the curve files") {
    unsetenv("APPROXDCT_BAS_MATRIX");
    TempDir tmp;
    const std::string table = tmp.file("energy.csv");
    std::ostringstream out;
    CHECK(cli::cmd_analyze(16, table, "", out) == 0);

    const std::vector<std::string> lines = read_lines(table);
    REQUIRE(lines.size() == 18);
    CHECK(lines[0] == "m,proposed,wht,dct_self_check");
    CHECK(lines[1] == "0,0.00,0.00,0.00");
    CHECK(lines[2] == "1,0.79,5.73,0.00");
    CHECK(lines[17] == "total,8.08,92.56,0.00");
    for (std::size_t i = 1; i < lines.size(); i++) {
        const auto fields = split_csv(lines[i]);
        REQUIRE(fields.size() == 4);
        CHECK(fields[3] == "0.00");
    }

    for (const char* name : {"proposed", "wht"}) {
        const std::vector<std::string> curves =
            read_lines(tmp.file(std::string("energy_curves_") + name + ".csv"));
        REQUIRE(curves.size() == 17);
        CHECK(curves[0] ==
              "omega,D_1,D_2,D_3,D_4,D_5,D_6,D_7,D_8,D_9,D_10,D_11,D_12,D_13,D_14,D_15");
        CHECK(split_csv(curves[1])[0] == "0");
        CHECK(split_csv(curves[16])[0] == "3.14159265359");
        for (std::size_t i = 1; i < curves.size(); i++)
            CHECK(split_csv(curves[i]).size() == 16);
    }
}

TEST_CASE("cmd_analyze validates the grid") {
    std::ostringstream out;
    CHECK_THROWS_AS(cli::cmd_analyze(1, "/tmp/never.csv", "", out), Error);
}

TEST_CASE("cmd_compress round trips a full retention image") {
    TempDir tmp;
    const std::string in = tmp.file("in.pgm");
    save_pgm(in, checkered(16, 16));
    const std::string rec = tmp.file("rec.pgm");
    const std::string diff = tmp.file("diff.pgm");

    std::ostringstream out;
    CHECK(cli::cmd_compress("proposed", 256, in, rec, diff, "", out) == 0);
    CHECK(out.str() == "inf 0 1\n");

    const ImagePlane original = load_pgm(in);
    CHECK(load_pgm(rec).pixels == original.pixels);
    for (std::uint8_t p : load_pgm(diff).pixels) CHECK(p == 0);
}

TEST_CASE("cmd_compress prints finite metrics under truncation") {
    TempDir tmp;
    const std::string in = tmp.file("in.pgm");
    save_pgm(in, checkered(32, 32));
    std::ostringstream out;
    CHECK(cli::cmd_compress("dct", 8, in, tmp.file("rec.pgm"), "", "", out) == 0);
    double p, m, q;
    REQUIRE(std::sscanf(out.str().c_str(), "%lf %lf %lf", &p, &m, &q) == 3);
    CHECK(p > 10.0);
    CHECK(m > 0.0);
    CHECK(q <= 1.0);
}

TEST_CASE("cmd_sweep writes both csvs over a directory corpus") {
    unsetenv("APPROXDCT_BAS_MATRIX");
    TempDir tmp;
    fs::create_directories(tmp.path / "corpus");
    save_pgm(tmp.file("corpus/aaa.pgm"), checkered(16, 16));
    save_pgm(tmp.file("corpus/bbb.pgm"), checkered(32, 32));
    // non-image clutter must be ignored
    std::ofstream(tmp.file("corpus/readme.txt")) << "not an image\n";

    const std::string per = tmp.file("sweep.csv");
    std::ostringstream out;
    CHECK(cli::cmd_sweep(tmp.file("corpus"), {4, 256}, per, "", out) == 0);

    const std::vector<std::string> rows = read_lines(per);
    REQUIRE(rows.size() == 1 + 3 * 2 * 2);
    CHECK(rows[0] == "transform,r,image,psnr_db,mse,uqi");
    CHECK(split_csv(rows[1])[0] == "proposed");
    CHECK(split_csv(rows[1])[1] == "4");
    CHECK(split_csv(rows[1])[2] == "aaa");
    CHECK(split_csv(rows[2])[2] == "bbb");
    // lossless row renders as inf/0/1
    const auto lossless = split_csv(rows[3]);
    CHECK(lossless[1] == "256");
    CHECK(lossless[3] == "inf");
    CHECK(lossless[4] == "0");
    CHECK(lossless[5] == "1");

    const std::vector<std::string> avg = read_lines(tmp.file("sweep_avg.csv"));
    REQUIRE(avg.size() == 1 + 3 * 2);
    CHECK(avg[0] ==
          "transform,r,avg_psnr_db,avg_mse,avg_uqi,psnr_diff_vs_dct_db,"
          "mse_diff_vs_dct,uqi_diff_vs_dct");
    // dct rows carry zero gaps by construction
    for (const std::string& row : {avg[3], avg[4]}) {
        const auto f = split_csv(row);
        CHECK(f[0] == "dct");
        CHECK(f[5] == "0");
        CHECK(f[6] == "0");
        CHECK(f[7] == "0");
    }
}

TEST_CASE("cmd_sweep rejects an empty corpus") {
    TempDir tmp;
    fs::create_directories(tmp.path / "corpus");
    std::ostringstream out;
    CHECK_THROWS_AS(cli::cmd_sweep(tmp.file("corpus"), {16}, tmp.file("s.csv"), "", out), Error);
}
