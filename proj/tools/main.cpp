// Copyright 2026 The rgc-tradeoff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rgc/bounds.hpp"
#include "rgc/csv.hpp"
#include "rgc/json_io.hpp"
#include "rgc/repair_matrix.hpp"
#include "rgc/svg.hpp"
#include "rgc/sweep.hpp"
#include "rgc/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

nlohmann::json load_config(const std::string& path) {
    if (path.empty()) return nlohmann::json::object();
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json cfg;
    in >> cfg;
    if (!cfg.is_object()) throw std::invalid_argument("config file must hold a JSON object");
    return cfg;
}

// Flags win over config values; config values land only where no flag was
// given on the command line.
void fill_from_config(const nlohmann::json& cfg, const char* key, CLI::Option* opt,
                      std::string& target) {
    if (opt->count() > 0 || !cfg.contains(key)) return;
    const nlohmann::json& v = cfg.at(key);
    if (v.is_string())
        target = v.get<std::string>();
    else
        target = v.dump();
}

void fill_from_config(const nlohmann::json& cfg, const char* key, CLI::Option* opt,
                      long long& target) {
    if (opt->count() > 0 || !cfg.contains(key)) return;
    const nlohmann::json& v = cfg.at(key);
    if (v.is_number_integer())
        target = v.get<long long>();
    else if (v.is_string())
        target = std::stoll(v.get<std::string>());
    else
        throw std::invalid_argument(std::string("config key '") + key + "' must be an integer");
}

std::filesystem::path resolve_output(const std::string& filename,
                                     const std::string& output_dir) {
    std::filesystem::path p(filename);
    if (p.is_absolute()) return p;
    std::string dir = output_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("RGC_OUTPUT_DIR")) dir = env;
    }
    if (dir.empty()) return p;
    return std::filesystem::path(dir) / p;
}

void require(bool present, const char* what) {
    if (!present) throw std::invalid_argument(std::string("missing required option ") + what);
}

std::string fraction_or_dash(const std::optional<rgc::Rational>& r) {
    return r ? rgc::to_fraction_string(*r) : std::string("-");
}

std::string integer_or_dash(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

// ---------------------------------------------------------------------- bound

struct BoundArgs {
    long long n = 0, k = 0, d = 0;
    std::string alpha, beta;
    std::string format = "plain";
};

int cmd_bound(const BoundArgs& args) {
    require(args.n > 0, "--n");
    require(args.k > 0, "--k");
    require(args.d > 0, "--d");
    require(!args.alpha.empty(), "--alpha");
    require(!args.beta.empty(), "--beta");
    rgc::CodeParams params{args.n, args.k, args.d};
    rgc::OperatingPoint pt{rgc::parse_rational_or_throw(args.alpha),
                           rgc::parse_rational_or_throw(args.beta)};
    rgc::BoundResult res = rgc::exact_repair_bound(params, pt);
    rgc::RegimeCoordinates rc =
        rgc::to_regime(params, rgc::clamp_to_mbr(params, pt).first);

    if (args.format == "json") {
        nlohmann::json j = rgc::bound_result_to_json(res);
        j["n"] = params.n;
        j["k"] = params.k;
        j["d"] = params.d;
        j["p"] = rc.p;
        j["theta"] = rgc::to_fraction_string(rc.theta);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    if (args.format != "plain")
        throw std::invalid_argument("bound supports --format plain or json");

    std::cout << "params: n=" << params.n << " k=" << params.k << " d=" << params.d
              << " alpha=" << rgc::to_fraction_string(pt.alpha)
              << " beta=" << rgc::to_fraction_string(pt.beta) << "\n";
    if (res.clamped)
        std::cout << "note: alpha exceeds d*beta, clamped to "
                  << rgc::to_fraction_string(rgc::Rational(params.d) * pt.beta) << "\n";
    std::cout << "regime: p=" << rc.p << " theta=" << rgc::to_fraction_string(rc.theta) << " ("
              << rgc::regime_name(res.regime) << ")\n";
    std::cout << "cut-set bound:      B <= " << rgc::to_fraction_string(res.b_cutset) << "\n";
    std::cout << "functional optimum: B^ = " << rgc::to_fraction_string(res.b_functional)
              << "\n";
    std::cout << "exact-repair bound: B <= " << rgc::to_fraction_string(res.b_exact) << "\n";
    std::cout << "eps0 = " << fraction_or_dash(res.eps0) << " (q0 = " << integer_or_dash(res.q0)
              << ")\n";
    std::cout << "eps1 = " << fraction_or_dash(res.eps1) << " (q1 = " << integer_or_dash(res.q1)
              << ")\n";
    std::cout << "improved: " << (res.improved ? "yes" : "no") << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------- sweep

struct SweepArgs {
    long long n = 0, k = 0, d = 0;
    std::string file_size;
    long long points = 0;
    std::string kind = "all";
    bool normalized = false;
    std::string out;
    std::string output_dir;
};

int cmd_sweep(const SweepArgs& args) {
    require(args.n > 0, "--n");
    require(args.k > 0, "--k");
    require(args.d > 0, "--d");
    require(args.points > 0, "--points");
    if (args.normalized && !args.file_size.empty())
        throw std::invalid_argument("--normalized fixes B = 1; drop --B");
    if (!args.normalized) require(!args.file_size.empty(), "--B");

    rgc::CodeParams params{args.n, args.k, args.d};
    rgc::Rational file_size =
        args.normalized ? rgc::Rational(1) : rgc::parse_rational_or_throw(args.file_size);

    std::vector<rgc::CurveKind> kinds;
    if (args.kind == "functional")
        kinds = {rgc::CurveKind::Functional};
    else if (args.kind == "exact")
        kinds = {rgc::CurveKind::ExactOuter};
    else if (args.kind == "sharing")
        kinds = {rgc::CurveKind::SpaceSharing};
    else if (args.kind == "all")
        kinds = {rgc::CurveKind::Functional, rgc::CurveKind::ExactOuter,
                 rgc::CurveKind::SpaceSharing};
    else
        throw std::invalid_argument("unknown --kind (want functional|exact|sharing|all)");

    std::vector<rgc::CurvePoint> points;
    for (rgc::CurveKind kind : kinds) {
        std::vector<rgc::CurvePoint> part =
            rgc::sweep_curve(params, file_size, args.points, kind);
        points.insert(points.end(), part.begin(), part.end());
    }
    std::string csv = rgc::to_sweep_csv(points, params);
    if (args.out.empty()) {
        std::cout << csv;
    } else {
        auto path = resolve_output(args.out, args.output_dir);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + path.string());
        out << csv;
    }
    return kExitOk;
}

// --------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    long long max_k = 8;
    long long max_d = 5;
    long long jobs = 0;
    bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& args) {
    bool all_ok = true;
    auto report_suite = [&](const char* name, const rgc::SuiteReport& report) {
        std::cout << name << ": " << report.checked << " checks, " << report.failures.size()
                  << " failures\n";
        if (!report.ok()) {
            all_ok = false;
            std::cout << "  first failure: " << report.failures.front() << "\n";
        }
    };

    if (args.suite == "identities" || args.suite == "all") {
        rgc::IdentityOptions opt;
        opt.max_k = args.max_k;
        if (args.inject_fault) opt.fault = rgc::Rational(1, 1000000);
        report_suite("identities", rgc::run_identity_suite(opt));
        report_suite("row-sums", rgc::run_rowsum_suite());
    }
    if (args.suite == "props" || args.suite == "all") {
        rgc::PropSuiteOptions opt;
        opt.max_d = args.max_d;
        opt.jobs = static_cast<unsigned>(args.jobs);
        rgc::PropSuiteReport report = rgc::run_prop_suite(opt);
        std::cout << "propositions: " << report.checked << " checks ("
                  << report.row_instances << " row, " << report.column_instances
                  << " column), " << report.certified << " certified optima, "
                  << report.failures.size() << " failures\n";
        if (report.min_slack)
            std::cout << "  tightest row-bound slack: "
                      << rgc::to_fraction_string(*report.min_slack) << "\n";
        if (!report.ok()) {
            all_ok = false;
            std::cout << "  first failure: " << report.failures.front() << "\n";
        }
    }
    std::cout << (all_ok ? "verify: PASS" : "verify: FAIL") << "\n";
    return all_ok ? kExitOk : kExitVerifyFailed;
}

// ----------------------------------------------------------------------- plot

struct PlotArgs {
    std::string in;
    std::string out;
    std::string output_dir;
};

int cmd_plot(const PlotArgs& args) {
    require(!args.in.empty(), "--in");
    require(!args.out.empty(), "--out");
    std::ifstream in(args.in, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open CSV: " + args.in);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::vector<rgc::PlotSeries> series = rgc::parse_sweep_csv(buffer.str());
    std::string svg = rgc::render_svg(series);
    auto path = resolve_output(args.out, args.output_dir);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path.string());
    out << svg;
    return kExitOk;
}

// --------------------------------------------------------------------- render

struct RenderArgs {
    long long n = 0, k = 0, d = 0, p = 0;
    std::string proof_case;
};

int cmd_render(const RenderArgs& args) {
    require(args.n > 0, "--n");
    require(args.k > 0, "--k");
    require(args.d > 0, "--d");
    require(args.p > 0, "--p");
    require(!args.proof_case.empty(), "--case");
    auto proof_case = rgc::repair::proof_case_from_name(args.proof_case);
    if (!proof_case) throw std::invalid_argument("unknown --case (want 1a|1b|2a|2b)");
    rgc::CodeParams params{args.n, args.k, args.d};
    rgc::repair::RegionSpec region = rgc::repair::build_region(params, args.p, *proof_case);
    std::cout << "case " << rgc::repair::proof_case_name(region.proof_case) << " p=" << region.p
              << " q=" << region.q << " cells=" << region.cells.size() << "\n";
    std::cout << rgc::repair::render_region(region);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"storage-repair-bandwidth tradeoff bounds for regenerating codes"};
    app.require_subcommand(1);

    std::string config_path;

    BoundArgs bound;
    CLI::App* bound_cmd = app.add_subcommand("bound", "compute the file-size bounds at a point");
    bound_cmd->add_option("--config", config_path, "JSON config file (flags win)");
    auto* bn = bound_cmd->add_option("--n", bound.n, "number of nodes");
    auto* bk = bound_cmd->add_option("--k", bound.k, "reconstruction degree");
    auto* bd = bound_cmd->add_option("--d", bound.d, "repair degree");
    auto* ba = bound_cmd->add_option("--alpha", bound.alpha, "per-node storage (rational)");
    auto* bb = bound_cmd->add_option("--beta", bound.beta, "per-helper transfer (rational)");
    auto* bf = bound_cmd->add_option("--format", bound.format, "plain or json");

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "emit tradeoff curve samples as CSV");
    sweep_cmd->add_option("--config", config_path, "JSON config file (flags win)");
    auto* sn = sweep_cmd->add_option("--n", sweep.n, "number of nodes");
    auto* sk = sweep_cmd->add_option("--k", sweep.k, "reconstruction degree");
    auto* sd = sweep_cmd->add_option("--d", sweep.d, "repair degree");
    auto* sB = sweep_cmd->add_option("--B", sweep.file_size, "file size (rational)");
    auto* sp = sweep_cmd->add_option("--points", sweep.points, "grid points per curve (>= 2)");
    auto* skind = sweep_cmd->add_option("--kind", sweep.kind,
                                        "functional|exact|sharing|all (default all)");
    sweep_cmd->add_flag("--normalized", sweep.normalized, "sweep at unit file size");
    auto* sout = sweep_cmd->add_option("--out", sweep.out, "write CSV here instead of stdout");
    auto* sdir = sweep_cmd->add_option("--output-dir", sweep.output_dir,
                                       "directory for outputs (or $RGC_OUTPUT_DIR)");

    VerifyArgs verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the identity / proposition check suites");
    verify_cmd->add_option("--config", config_path, "JSON config file (flags win)");
    verify_cmd->add_option("suite", verify.suite, "identities, props or all")
        ->check(CLI::IsMember({"identities", "props", "all"}));
    verify_cmd->add_option("--max-k", verify.max_k, "largest k in the identity grid");
    verify_cmd->add_option("--max-d", verify.max_d, "largest d in the proposition grid");
    verify_cmd->add_option("--jobs", verify.jobs, "worker threads for LP instances");
    verify_cmd->add_flag("--inject-fault", verify.inject_fault,
                         "testing hook: perturb one closed-form coefficient");

    PlotArgs plot;
    CLI::App* plot_cmd = app.add_subcommand("plot", "render a sweep CSV as an SVG chart");
    plot_cmd->add_option("--config", config_path, "JSON config file (flags win)");
    auto* pin = plot_cmd->add_option("--in", plot.in, "input CSV (sweep format)");
    auto* pout = plot_cmd->add_option("--out", plot.out, "output SVG path");
    auto* pdir = plot_cmd->add_option("--output-dir", plot.output_dir,
                                      "directory for outputs (or $RGC_OUTPUT_DIR)");

    RenderArgs render;
    CLI::App* render_cmd =
        app.add_subcommand("render", "print a proof-case region of the repair matrix");
    render_cmd->add_option("--config", config_path, "JSON config file (flags win)");
    auto* rn = render_cmd->add_option("--n", render.n, "number of nodes");
    auto* rk = render_cmd->add_option("--k", render.k, "reconstruction degree");
    auto* rd = render_cmd->add_option("--d", render.d, "repair degree");
    auto* rp = render_cmd->add_option("--p", render.p, "regime index p");
    auto* rc = render_cmd->add_option("--case", render.proof_case, "1a|1b|2a|2b");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        nlohmann::json cfg = load_config(config_path);
        if (bound_cmd->parsed()) {
            fill_from_config(cfg, "n", bn, bound.n);
            fill_from_config(cfg, "k", bk, bound.k);
            fill_from_config(cfg, "d", bd, bound.d);
            fill_from_config(cfg, "alpha", ba, bound.alpha);
            fill_from_config(cfg, "beta", bb, bound.beta);
            fill_from_config(cfg, "format", bf, bound.format);
            return cmd_bound(bound);
        }
        if (sweep_cmd->parsed()) {
            fill_from_config(cfg, "n", sn, sweep.n);
            fill_from_config(cfg, "k", sk, sweep.k);
            fill_from_config(cfg, "d", sd, sweep.d);
            fill_from_config(cfg, "B", sB, sweep.file_size);
            fill_from_config(cfg, "points", sp, sweep.points);
            fill_from_config(cfg, "kind", skind, sweep.kind);
            fill_from_config(cfg, "out", sout, sweep.out);
            fill_from_config(cfg, "output_dir", sdir, sweep.output_dir);
            return cmd_sweep(sweep);
        }
        if (verify_cmd->parsed()) return cmd_verify(verify);
        if (plot_cmd->parsed()) {
            fill_from_config(cfg, "in", pin, plot.in);
            fill_from_config(cfg, "out", pout, plot.out);
            fill_from_config(cfg, "output_dir", pdir, plot.output_dir);
            return cmd_plot(plot);
        }
        if (render_cmd->parsed()) {
            fill_from_config(cfg, "n", rn, render.n);
            fill_from_config(cfg, "k", rk, render.k);
            fill_from_config(cfg, "d", rd, render.d);
            fill_from_config(cfg, "p", rp, render.p);
            fill_from_config(cfg, "case", rc, render.proof_case);
            return cmd_render(render);
        }
    } catch (const rgc::CsvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
