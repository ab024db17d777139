#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zetacensus/census.hpp"
#include "zetacensus/checks.hpp"
#include "zetacensus/gammafn.hpp"
#include "zetacensus/parallel.hpp"
#include "zetacensus/pseudo_gamma.hpp"
#include "zetacensus/xi.hpp"
#include "zetacensus/zeta.hpp"

namespace {

using namespace zetacensus;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kNumeric = 3;
constexpr int kSentinel = 4;

struct CliConfig {
    double target = 1e-12;
    double height_cap = 1000.0;
    bool unsafe_heights = false;
    int threads = 0; // 0: ZETA_CENSUS_THREADS, then hardware
    std::string format = "plain";
    std::string out_path;
    std::uint64_t seed = 20260822;

    EvalOptions eval_opts() const {
        EvalOptions o;
        o.target_abs_err = target;
        return o;
    }
    double cap() const { return unsafe_heights ? 1e9 : height_cap; }
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16g", v);
    return buf;
}

void print_value(const CliConfig& cfg, const Cplx& v, double err) {
    if (cfg.format == "json")
        std::cout << "{\"re\":" << num(v.real()) << ",\"im\":" << num(v.imag())
                  << ",\"err\":" << num(err) << "}\n";
    else if (cfg.format == "csv")
        std::cout << "re,im,err\n" << num(v.real()) << "," << num(v.imag()) << "," << num(err)
                  << "\n";
    else
        std::cout << "re " << num(v.real()) << " im " << num(v.imag()) << " err " << num(err)
                  << "\n";
}

void print_count(const CliConfig& cfg, const char* key, long value) {
    if (cfg.format == "json")
        std::cout << "{\"" << key << "\":" << value << "}\n";
    else if (cfg.format == "csv")
        std::cout << key << "\n" << value << "\n";
    else
        std::cout << key << " " << value << "\n";
}

int cmd_eval(const CliConfig& cfg, const std::string& fn, double re, double im, double Y,
             bool has_Y) {
    const EvalOptions opts = cfg.eval_opts();
    const Cplx s(re, im);
    Cplx v;
    if (fn == "zeta") {
        v = zeta(s, opts);
    } else if (fn == "xi") {
        v = xi(s, opts);
    } else if (fn == "gamma") {
        v = gamma_fn(s, opts);
    } else if (fn == "loggamma") {
        v = log_gamma(s, opts);
    } else if (fn == "nabla" || fn == "B") {
        if (!has_Y) {
            std::cerr << "error: --Y is required for " << fn << "\n";
            return kUsage;
        }
        const PseudoGammaParams p(Y);
        v = (fn == "nabla") ? nabla(s, p) : ratio_B(s, p, opts);
    } else {
        std::cerr << "error: unknown function " << fn << "\n";
        return kUsage;
    }
    const double err = std::max(cfg.target, std::abs(v) * 1e-15);
    print_value(cfg, v, err);
    return kOk;
}

int cmd_zeros(const CliConfig& cfg, double T, const std::string& out) {
    const EvalOptions opts = cfg.eval_opts();
    const auto zeros = locate_critical_zeros(T, opts, cfg.cap());
    if (out.empty()) {
        write_census_csv(std::cout, zeros);
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out << "\n";
            return kUsage;
        }
        write_census_csv(f, zeros);
    }
    const long n = static_cast<long>(zeros.size());
    if (T > 6.3) {
        const double main = rvm_main_term(T);
        if (cfg.format == "json")
            std::cout << "{\"count\":" << n << ",\"main_term\":" << num(main)
                      << ",\"diff\":" << num(n - main) << "}\n";
        else
            std::cout << "count " << n << " main_term " << num(main) << " diff "
                      << num(n - main) << "\n";
    } else {
        print_count(cfg, "count", n);
    }
    return kOk;
}

int cmd_count(const CliConfig& cfg, double T) {
    const int n = count_zeros_NT(T, cfg.eval_opts(), cfg.cap());
    print_count(cfg, "N", n);
    return kOk;
}

int cmd_density(const CliConfig& cfg, double lambda, double T) {
    const EvalOptions opts = cfg.eval_opts();
    DensityCount d = density_breakdown(lambda, T, opts, cfg.cap());
    if (d.off_line != 0) {
        // a nonzero off-line count would be a historic finding; before
        // trusting it, redo the breakdown at a tighter error target
        EvalOptions tight = opts;
        tight.target_abs_err = opts.target_abs_err / 100.0;
        d = density_breakdown(lambda, T, tight, cfg.cap());
    }
    if (cfg.format == "json")
        std::cout << "{\"total\":" << d.total << ",\"off_line\":" << d.off_line << "}\n";
    else if (cfg.format == "csv")
        std::cout << "total,off_line\n" << d.total << "," << d.off_line << "\n";
    else
        std::cout << "total " << d.total << " off_line " << d.off_line << "\n";
    if (d.off_line != 0) {
        for (const auto& w : d.off_line_windows)
            std::cerr << "off-line window [" << num(w.first) << ", " << num(w.second) << "]\n";
        return kSentinel;
    }
    return kOk;
}

int cmd_verify(const CliConfig& cfg, const std::string& suite, const std::string& json_path) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);

    const EvalOptions opts = cfg.eval_opts();
    std::vector<std::pair<std::string, std::vector<CheckReport>>> results;
    bool all_pass = true;
    for (const auto& name : names) {
        std::vector<CheckReport> reports;
        if (name == "functional_equation")
            reports = check_functional_equation(200, cfg.seed, opts);
        else
            reports = run_suite(name, opts);
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass;
            std::ostringstream line;
            line << (r.pass ? "PASS " : "FAIL ") << r.check_id << "  max " << num(r.max_residual);
            if (!std::isnan(r.bound_value))
                line << "  bound " << num(r.bound_value);
            if (!std::isnan(r.fitted_constant))
                line << "  fit " << num(r.fitted_constant);
            std::cout << line.str() << "\n";
        }
        results.emplace_back(name, std::move(reports));
    }

    if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << json_path << "\n";
            return kUsage;
        }
        f << "{\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            std::string arr = reports_to_json(results[i].second);
            if (!arr.empty() && arr.back() == '\n')
                arr.pop_back();
            f << "\"" << results[i].first << "\":" << arr;
            f << (i + 1 < results.size() ? ",\n" : "\n");
        }
        f << "}\n";
    }
    return all_pass ? kOk : kVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"zeta zero census and verification toolkit"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    app.add_option("--target", cfg.target, "absolute error target")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "worker thread count")->check(CLI::PositiveNumber);
    app.add_option("--height-cap", cfg.height_cap, "largest admissible height");
    app.add_flag("--unsafe-heights", cfg.unsafe_heights, "lift the height cap");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    app.add_option("--seed", cfg.seed, "sample seed for randomized suites");

    std::string fn, zeros_out, suite = "all", json_path;
    double re = 0.0, im = 0.0, Y = 0.0, height = 0.0, lambda = 0.0;

    CLI::App* eval = app.add_subcommand("eval", "evaluate a function at a point");
    eval->add_option("--function", fn, "zeta|xi|gamma|loggamma|nabla|B")->required();
    eval->add_option("--re", re, "real part")->required();
    eval->add_option("--im", im, "imaginary part")->required();
    CLI::Option* yopt = eval->add_option("--Y", Y, "comparison function height");

    CLI::App* zeros = app.add_subcommand("zeros", "export the zero census as CSV");
    zeros->add_option("--height", height, "census height")->required();
    zeros->add_option("--out", zeros_out, "CSV path (stdout when omitted)");

    CLI::App* count = app.add_subcommand("count", "count critical zeros up to a height");
    count->add_option("--height", height, "count height")->required();

    CLI::App* density = app.add_subcommand("density", "count zeros in the density rectangle");
    density->add_option("--lambda", lambda, "left edge of the rectangle")->required();
    density->add_option("--height", height, "rectangle height")->required();

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "suite name or all");
    verify->add_option("--json", json_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    set_thread_count(cfg.threads);

    try {
        if (app.got_subcommand(eval))
            return cmd_eval(cfg, fn, re, im, Y, yopt->count() > 0);
        if (app.got_subcommand(zeros))
            return cmd_zeros(cfg, height, zeros_out);
        if (app.got_subcommand(count))
            return cmd_count(cfg, height);
        if (app.got_subcommand(density))
            return cmd_density(cfg, lambda, height);
        if (app.got_subcommand(verify))
            return cmd_verify(cfg, suite, json_path);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumeric;
    }
    return kUsage;
}
