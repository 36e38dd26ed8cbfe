#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rotkit/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace rotkit;

namespace {

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << payload;
}

double parse_slope(const std::string& s) {
    if (s == "golden") return (std::sqrt(5.0) - 1) / 2;
    return std::stod(s);
}

FreqVector parse_alpha(const std::string& s) {
    FreqVector f;
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        size_t comma = s.find(',', pos);
        std::string piece =
            comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
        if (piece.empty()) throw std::invalid_argument("bad frequency vector: " + s);
        f[i] = parse_rat(piece);
        pos = comma == std::string::npos ? s.size() : comma + 1;
    }
    if (pos < s.size()) throw std::invalid_argument("bad frequency vector: " + s);
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* tc = std::getenv("ROTKIT_THREADS")) {
#ifdef _OPENMP
        int n = std::atoi(tc);
        if (n > 0) omp_set_num_threads(n);
#else
        (void)tc;
#endif
    }

    CLI::App app{"rotation sets of the stunted figure-eight family"};
    app.require_subcommand(1);

    std::string t_str = "0", out_path, format = "json";
    int depth = 8, max_period = 0;

    auto* rotset = app.add_subcommand("rotset", "certified rotation set at one parameter");
    rotset->add_option("--t", t_str, "parameter in [0,1], e.g. 3/4")->required();
    rotset->add_option("--depth", depth, "window order of the outer model");
    rotset->add_option("--max-period", max_period, "inner witness period bound (0 = auto)");
    rotset->add_option("--format", format, "json | svg | csv")
        ->check(CLI::IsMember({"json", "svg", "csv"}));
    rotset->add_option("--out", out_path, "output file (default stdout)");

    std::string from_str = "0", to_str = "1";
    int steps = 64;
    auto* scan_cmd = app.add_subcommand("scan", "plateau scan over a parameter range");
    scan_cmd->add_option("--from", from_str, "range start")->required();
    scan_cmd->add_option("--to", to_str, "range end")->required();
    scan_cmd->add_option("--steps", steps, "grid points (>= 2)");
    scan_cmd->add_option("--depth", depth, "window order of the outer model");
    scan_cmd->add_option("--max-period", max_period, "inner witness period bound (0 = auto)");
    scan_cmd->add_option("--out", out_path, "output file (default stdout)");

    size_t len = 64;
    bool as_json = false;
    auto* knead = app.add_subcommand("knead", "kneading word of a parameter");
    knead->add_option("--t", t_str, "parameter in [0,1]")->required();
    knead->add_option("--len", len, "observation depth");
    knead->add_flag("--json", as_json, "emit full diagnostics");
    knead->add_option("--out", out_path, "output file (default stdout)");

    std::string alpha_str;
    int bound = 12;
    auto* infimax_cmd = app.add_subcommand("infimax", "periodic infimax of a rational vector");
    infimax_cmd->add_option("--alpha", alpha_str, "frequency vector, e.g. 1/2,0,1/2")->required();
    infimax_cmd->add_option("--bound", bound, "denominator bound of the necklace oracle");
    infimax_cmd->add_option("--out", out_path, "output file (default stdout)");

    std::string subst_str = "0>1;1>200;2>20";
    int seed = 2;
    auto* dev = app.add_subcommand("deviation", "cocycle deviation of a substitution fixed point");
    dev->add_option("--subst", subst_str, "substitution, e.g. 0>1;1>200;2>20");
    dev->add_option("--seed", seed, "fixed-point seed digit");
    dev->add_option("--len", len, "prefix length");
    dev->add_option("--out", out_path, "output file (default stdout)");

    std::string w0_str = "(20)", w1_str = "(21)", lambda_str = "golden";
    int k0 = 1, k1 = 1;
    int64_t stride = 0;
    auto* goober_cmd = app.add_subcommand("goober", "bounded-deviation Sturmian block word");
    goober_cmd->add_option("--w0", w0_str, "first periodic block");
    goober_cmd->add_option("--w1", w1_str, "second periodic block");
    goober_cmd->add_option("--k0", k0, "repeats of w0");
    goober_cmd->add_option("--k1", k1, "repeats of w1");
    goober_cmd->add_option("--lambda", lambda_str, "slope in [0,1], or 'golden'");
    goober_cmd->add_option("--len", len, "word length");
    goober_cmd->add_option("--stride", stride, "checkpoint stride (0 = every step)");
    goober_cmd->add_option("--out", out_path, "output file (default stdout)");

    std::string x_str = "S1:7/2";
    int64_t orbit_steps = 100;
    auto* orbit_cmd = app.add_subcommand("orbit", "exact orbit of a point with its cocycle");
    orbit_cmd->add_option("--t", t_str, "parameter in [0,1]")->required();
    orbit_cmd->add_option("--x", x_str, "starting point, e.g. S1:149/40");
    orbit_cmd->add_option("--steps", orbit_steps, "iterations");
    orbit_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (rotset->parsed()) {
            Rat t = parse_rat(t_str);
            int mp = max_period > 0 ? max_period : std::min(depth, 10);
            RotsetReport rep = rotation_set(t, depth, mp);
            if (format == "json")
                emit(out_path, report_json(rep));
            else if (format == "csv")
                emit(out_path, report_csv(rep));
            else
                emit(out_path, svg_rotset(rep));
        } else if (scan_cmd->parsed()) {
            PlateauList pl = scan(parse_rat(from_str), parse_rat(to_str), steps, depth,
                                  max_period);
            emit(out_path, scan_csv(pl));
        } else if (knead->parsed()) {
            KneadingResult k = kneading_prefix(parse_rat(t_str), len);
            if (as_json) {
                std::string certified =
                    k.certificate.kind == MaximalVerdict::Yes ? "exact" : "prefix";
                emit(out_path, std::string("{\"kneading\":\"") + k.kneading.str() +
                                   "\",\"theta\":\"" + k.theta_prefix.str() +
                                   "\",\"certificate\":\"" + certified + "\"}\n");
            } else {
                emit(out_path, k.kneading.str() + "\n");
            }
        } else if (infimax_cmd->parsed()) {
            DigitWord w = infimax_rational(parse_alpha(alpha_str), bound);
            emit(out_path, w.str() + "\n");
        } else if (dev->parsed()) {
            Substitution s = Substitution::parse(subst_str);
            auto word = subst_fixed_prefix(s, static_cast<Digit>(seed), len);
            AbelMatrix a = abelianization(s);
            PfData pf = pf_eigen(a);
            std::vector<int64_t> checkpoints;
            std::array<int64_t, 3> v{0, 0, 0};
            v[seed] = 1;
            for (;;) {
                v = a.apply(v);
                int64_t r = v[0] + v[1] + v[2];
                if (r > static_cast<int64_t>(word.size())) break;
                checkpoints.push_back(r);
            }
            emit(out_path, deviation_csv(deviation_profile(word, pf.alpha, checkpoints)));
        } else if (goober_cmd->parsed()) {
            Goober g = build_goober(DigitWord::parse(w0_str), DigitWord::parse(w1_str), k0, k1,
                                    parse_slope(lambda_str), len);
            std::vector<int64_t> checkpoints;
            int64_t step = stride > 0 ? stride : 1;
            for (int64_t r = step; r <= static_cast<int64_t>(g.word.size()); r += step)
                checkpoints.push_back(r);
            emit(out_path, deviation_csv(deviation_profile(g.word, g.target, checkpoints)));
        } else if (orbit_cmd->parsed()) {
            Rat t = parse_rat(t_str);
            EightPoint x = parse_point(x_str);
            std::vector<OrbitRow> rows;
            rows.reserve(orbit_steps);
            for (int64_t i = 0; i < orbit_steps; ++i) {
                rows.push_back({i, x, gamma(x)});
                x = apply_ft(t, x);
            }
            emit(out_path, orbit_csv(rows));
            OrbitResult est = orbit_cocycle(t, parse_point(x_str), orbit_steps);
            std::cerr << "estimate " << rat_str(est.estimate[0]) << " "
                      << rat_str(est.estimate[1]) << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
