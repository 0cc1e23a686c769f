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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "approxdct/cli.hpp"
#include "approxdct/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"multiplierless 16-point DCT approximation toolkit"};
    app.require_subcommand(1);

    std::string transform = "proposed";
    std::string bas, out, diff, corpus, input;
    std::string r_range = "2:256:2";
    int r = 256;
    int grid = 1024;
    int wbits = 8;

    const std::vector<std::string> names = {"proposed", "dct", "wht", "bas2010"};

    CLI::App* verify = app.add_subcommand("verify", "factorization and orthogonality checks");
    verify->add_option("--bas-matrix", bas, "path to a 16x16 comparator matrix file");

    CLI::App* analyze = app.add_subcommand("analyze", "error-energy table and distance curves");
    analyze->add_option("--grid", grid, "curve sample count over [0, pi]")
        ->check(CLI::Range(2, 1 << 20));
    analyze->add_option("--out", out, "table CSV path")->required();
    analyze->add_option("--bas-matrix", bas, "path to a 16x16 comparator matrix file");

    CLI::App* compress = app.add_subcommand("compress", "round-trip one image at retention r");
    compress->add_option("input", input, "input PGM (P5, maxval 255)")->required();
    compress->add_option("--transform", transform, "transform to use")
        ->check(CLI::IsMember(names));
    compress->add_option("--r", r, "retained zig-zag coefficients")
        ->check(CLI::Range(1, 256));
    compress->add_option("--out", out, "reconstructed PGM path")->required();
    compress->add_option("--diff-out", diff, "x2-scaled |original - reconstruction| PGM path");
    compress->add_option("--bas-matrix", bas, "path to a 16x16 comparator matrix file");

    CLI::App* sweep = app.add_subcommand("sweep", "PSNR/MSE/UQI sweep over a corpus");
    sweep->add_option("--corpus", corpus, "directory with *.pgm test images")->required();
    sweep->add_option("--r-range", r_range, "retention values as a:b:step");
    sweep->add_option("--out", out, "per-image CSV path (averages land at <stem>_avg.csv)")
        ->required();
    sweep->add_option("--bas-matrix", bas, "path to a 16x16 comparator matrix file");

    CLI::App* bitwidth = app.add_subcommand("bitwidth", "worst-case growth per stage");
    bitwidth->add_option("--bitwidth", wbits, "unsigned input sample width")
        ->check(CLI::Range(1, 48));

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return approxdct::cli::cmd_verify(bas, std::cout);
        if (analyze->parsed()) return approxdct::cli::cmd_analyze(grid, out, bas, std::cout);
        if (compress->parsed())
            return approxdct::cli::cmd_compress(transform, r, input, out, diff, bas,
                                                std::cout);
        if (sweep->parsed())
            return approxdct::cli::cmd_sweep(corpus, approxdct::cli::parse_r_range(r_range),
                                             out, bas, std::cout);
        if (bitwidth->parsed()) return approxdct::cli::cmd_bitwidth(wbits, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
