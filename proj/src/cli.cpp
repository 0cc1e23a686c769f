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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "approxdct/codec.hpp"
#include "approxdct/errors.hpp"
#include "approxdct/fastdct.hpp"
#include "approxdct/imageio.hpp"
#include "approxdct/spectral.hpp"

namespace approxdct::cli {

namespace {

std::string resolve_bas(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (auto env = bas2010_path_from_env()) return *env;
    return {};
}

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw BadFormat(path + ": cannot open for writing");
    return out;
}

// table.csv + "_avg.csv" -> table_avg.csv, directory part kept
std::string sibling(const std::string& base, const std::string& suffix) {
    const std::filesystem::path p(base);
    return (p.parent_path() / (p.stem().string() + suffix)).string();
}

}  // namespace

std::string fmt_table(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_full(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<int> parse_r_range(const std::string& text) {
    int a = 0, b = 0, step = 0;
    char trailing = 0;
    if (std::sscanf(text.c_str(), "%d:%d:%d%c", &a, &b, &step, &trailing) != 3)
        throw Error("--r-range must look like a:b:step");
    if (a < 1 || b > kN * kN || a > b || step < 1)
        throw Error("--r-range needs 1 <= a <= b <= 256 and step >= 1");
    std::vector<int> rs;
    for (int r = a; r <= b; r += step) rs.push_back(r);
    return rs;
}

TransformSpec make_spec(const std::string& name, const std::string& bas_path) {
    if (name == "proposed") return build_proposed();
    if (name == "dct") return build_exact_dct();
    if (name == "wht") return build_wht();
    if (name == "bas2010") {
        const std::string path = resolve_bas(bas_path);
        if (path.empty())
            throw ComparatorUnavailable(
                "bas2010 needs --bas-matrix or APPROXDCT_BAS_MATRIX");
        return build_bas2010(path);
    }
    throw Error("unknown transform: " + name);
}

int cmd_verify(const std::string& bas_path, std::ostream& out) {
    bool ok = true;
    auto report = [&out, &ok](const char* name, bool pass, const std::string& why) {
        out << name << ": " << (pass ? "PASS" : "FAIL (" + why + ")") << "\n";
        if (!pass) ok = false;
    };

    std::optional<TransformSpec> bas;
    std::string bas_why;
    const std::string path = resolve_bas(bas_path);
    if (!path.empty()) {
        try {
            bas = build_bas2010(path);
        } catch (const Error& e) {
            bas_why = e.what();
        }
    }

    // factorization: stage product, basis vectors, bulk random agreement
    OpCounts fast_ops, direct_ops;
    {
        std::string why;
        try {
            (void)factorization();
            for (int k = 0; k < kN; k++) {
                IVec16 e{};
                e[k] = 1;
                if (fast_forward(e) != direct_forward(e))
                    throw FactorizationInconsistent("fast != direct on a basis vector");
            }
            std::mt19937_64 rng(20260825);
            std::uniform_int_distribution<std::int64_t> dist(-(1 << 20), (1 << 20) - 1);
            for (int t = 0; t < 10000; t++) {
                IVec16 x{};
                for (auto& v : x) v = dist(rng);
                if (fast_forward(x) != direct_forward(x))
                    throw FactorizationInconsistent("fast != direct on a random vector");
            }
            IVec16 probe{};
            for (auto& v : probe) v = dist(rng);
            fast_forward(probe, &fast_ops);
            direct_forward(probe, &direct_ops);
        } catch (const Error& e) {
            why = e.what();
        }
        report("factorization", why.empty(), why);
    }

    // orthogonality of every scaled kernel on hand, plus the exact integer
    // Gram of the raw kernel: diag(16, 14, 12, 14) repeating
    {
        bool pass = true;
        std::string why;
        std::vector<TransformSpec> specs = {build_proposed(), build_exact_dct(),
                                            build_wht()};
        if (bas) specs.push_back(*bas);
        for (const TransformSpec& s : specs) {
            const Mat16 a = s.scaled();
            double norm = 0.0;
            for (int i = 0; i < kN; i++) {
                double row = 0.0;
                for (int j = 0; j < kN; j++) {
                    double g = 0.0;
                    for (int k = 0; k < kN; k++) g += a[i][k] * a[j][k];
                    row += std::fabs(g - (i == j ? 1.0 : 0.0));
                }
                norm = std::fmax(norm, row);
            }
            if (norm >= 1e-12 && pass) {
                pass = false;
                why = std::string(to_string(s.name)) + " gram deviates by " + fmt_full(norm);
            }
        }
        static const int kDiag[4] = {16, 14, 12, 14};
        const IMat16 t = build_proposed().ikernel;
        for (int i = 0; i < kN && pass; i++) {
            for (int j = 0; j < kN && pass; j++) {
                int g = 0;
                for (int k = 0; k < kN; k++) g += int(t[i][k]) * int(t[j][k]);
                const int want = i == j ? kDiag[i % 4] : 0;
                if (g != want) {
                    pass = false;
                    why = "integer kernel gram broken at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")";
                }
            }
        }
        report("orthogonality", pass, why);
    }

    // quadrature against the closed form, every transform, every row
    {
        bool pass = true;
        std::string why;
        const TransformSpec dct = build_exact_dct();
        const Mat16 c = dct.scaled();
        std::vector<TransformSpec> specs = {build_proposed(), build_wht(), dct};
        if (bas) specs.push_back(*bas);
        try {
            for (const TransformSpec& s : specs) {
                const Mat16 a = s.scaled();
                for (int m = 0; m < kN; m++) {
                    const double gap =
                        std::fabs(error_energy(c[m], a[m]) - parseval_energy(c[m], a[m]));
                    if (gap >= 1e-6 && pass) {
                        pass = false;
                        why = std::string(to_string(s.name)) + " row " + std::to_string(m) +
                              " off by " + fmt_full(gap);
                    }
                }
            }
        } catch (const Error& e) {
            pass = false;
            why = e.what();
        }
        report("parseval", pass, why);
    }

    if (path.empty())
        out << "bas2010: SKIPPED (no matrix provided)\n";
    else
        report("bas2010", bas.has_value(), bas_why);

    const bool counts_ok = fast_ops.additions == 72 && direct_ops.additions == 208 &&
                           fast_ops.multiplications + direct_ops.multiplications == 0 &&
                           fast_ops.shifts + direct_ops.shifts == 0;
    if (!counts_ok) ok = false;
    out << "additions(fast)=" << fast_ops.additions
        << " additions(direct)=" << direct_ops.additions
        << " mults=" << fast_ops.multiplications + direct_ops.multiplications
        << " shifts=" << fast_ops.shifts + direct_ops.shifts << ' '
        << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_analyze(int grid, const std::string& out_path, const std::string& bas_path,
                std::ostream&) {
    if (grid < 2) throw Error("--grid must be at least 2");

    const TransformSpec dct = build_exact_dct();
    std::vector<TransformSpec> approx = {build_proposed(), build_wht()};
    const std::string path = resolve_bas(bas_path);
    if (!path.empty()) approx.push_back(build_bas2010(path));

    std::vector<SpectralReport> reps;
    reps.reserve(approx.size());
    for (const TransformSpec& s : approx) reps.push_back(full_report(s, dct));
    const SpectralReport self = full_report(dct, dct);

    std::ofstream table = open_csv(out_path);
    table << "m";
    for (const TransformSpec& s : approx) table << ',' << to_string(s.name);
    table << ",dct_self_check\n";
    for (int m = 0; m < kN; m++) {
        table << m;
        for (const SpectralReport& r : reps) table << ',' << fmt_table(r.row_energy[m]);
        table << ',' << fmt_table(self.row_energy[m]) << "\n";
    }
    table << "total";
    for (const SpectralReport& r : reps) table << ',' << fmt_table(r.total);
    table << ',' << fmt_table(self.total) << "\n";
    table.close();
    if (!table) throw BadFormat(out_path + ": short write");

    const Mat16 c = dct.scaled();
    for (const TransformSpec& s : approx) {
        const Mat16 a = s.scaled();
        std::ofstream csv =
            open_csv(sibling(out_path, std::string("_curves_") + to_string(s.name) + ".csv"));
        csv << "omega";
        for (int m = 1; m < kN; m++) csv << ",D_" << m;
        csv << "\n";
        for (int g = 0; g < grid; g++) {
            const double omega = M_PI * double(g) / double(grid - 1);
            csv << fmt_full(omega);
            for (int m = 1; m < kN; m++) csv << ',' << fmt_full(distance_at(c[m], a[m], omega));
            csv << "\n";
        }
    }
    return 0;
}

int cmd_compress(const std::string& transform, int r, const std::string& input,
                 const std::string& out_path, const std::string& diff_path,
                 const std::string& bas_path, std::ostream& out) {
    const TransformSpec spec = make_spec(transform, bas_path);
    const ImagePlane img = load_pgm(input);
    const ImagePlane rec = compress_image(spec, img, r);
    if (!out_path.empty()) save_pgm(out_path, rec);
    if (!diff_path.empty()) save_pgm(diff_path, diff_image(img, rec));
    out << fmt_full(psnr(img, rec)) << ' ' << fmt_full(mse(img, rec)) << ' '
        << fmt_full(uqi(img, rec)) << "\n";
    return 0;
}

int cmd_sweep(const std::string& corpus_dir, const std::vector<int>& r_values,
              const std::string& out_path, const std::string& bas_path,
              std::ostream& out) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".pgm")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error(corpus_dir + ": no .pgm images found");

    std::vector<std::pair<std::string, ImagePlane>> corpus;
    corpus.reserve(files.size());
    for (const fs::path& f : files)
        corpus.emplace_back(f.stem().string(), load_pgm(f.string()));

    std::vector<TransformSpec> specs = {build_proposed(), build_exact_dct(),
                                        build_wht()};
    const std::string path = resolve_bas(bas_path);
    if (!path.empty()) {
        TransformSpec bas = build_bas2010(path);
        if (bas.orthogonal)
            specs.push_back(std::move(bas));
        else
            out << "note: bas2010 matrix is not orthogonal; left out of the sweep\n";
    }

    const QualityReport rep = sweep(specs, corpus, r_values);

    std::ofstream per = open_csv(out_path);
    per << "transform,r,image,psnr_db,mse,uqi\n";
    for (const SweepCell& cell : rep.cells)
        for (const ImageMetrics& m : cell.per_image)
            per << to_string(cell.transform) << ',' << cell.r << ',' << m.image << ','
                << fmt_full(m.psnr_db) << ',' << fmt_full(m.mse) << ','
                << fmt_full(m.uqi) << "\n";
    per.close();
    if (!per) throw BadFormat(out_path + ": short write");

    std::ofstream avg = open_csv(sibling(out_path, "_avg.csv"));
    avg << "transform,r,avg_psnr_db,avg_mse,avg_uqi,psnr_diff_vs_dct_db,"
           "mse_diff_vs_dct,uqi_diff_vs_dct\n";
    for (const SweepCell& cell : rep.cells)
        avg << to_string(cell.transform) << ',' << cell.r << ','
            << fmt_full(cell.avg_psnr_db) << ',' << fmt_full(cell.avg_mse) << ','
            << fmt_full(cell.avg_uqi) << ',' << fmt_full(cell.psnr_diff_vs_dct_db)
            << ',' << fmt_full(cell.mse_diff_vs_dct) << ','
            << fmt_full(cell.uqi_diff_vs_dct) << "\n";
    return 0;
}

int cmd_bitwidth(int input_bits, std::ostream& out) {
    const BitGrowthReport rep = analyze_bit_growth(input_bits);
    out << "input_bits=" << rep.input_bits << "\n";
    for (int s = 0; s < Factorization::kStages; s++)
        out << "stage" << (s + 1) << "_max=" << rep.stage_max[s] << "\n";
    out << "output_max=" << rep.output_max << "\n";
    out << "signed_bits=" << rep.signed_bits << "\n";
    out << "output_max_2d=" << rep.output_max_2d << "\n";
    out << "signed_bits_2d=" << rep.signed_bits_2d << "\n";
    out << "witness_lane=" << rep.witness_lane << "\n";
    out << "witness=";
    for (int j = 0; j < kN; j++) out << (j ? "," : "") << rep.witness[j];
    out << "\n";
    return 0;
}

}  // namespace approxdct::cli
