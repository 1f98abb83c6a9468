// curvatura: constant-curvature plane geometry toolkit.
//
//   curvatura solve <request.json|->              run one JSON task
//   curvatura check [--suite NAME|all] [...]      run proposition suites
//   curvatura figure --id ID [--params P] --out F render a figure as SVG
//
// Exit codes: 0 success, 1 proposition failure, 2 usage/schema error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "curvatura/figures.hpp"
#include "curvatura/solve.hpp"
#include "curvatura/suites.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw curvatura::SchemaError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace curvatura;

    CLI::App app{"constant-curvature plane geometry toolkit"};
    app.require_subcommand(1);

    std::string solve_input;
    CLI::App* solve = app.add_subcommand("solve", "run one JSON task request");
    solve->add_option("request", solve_input, "request file, or - for stdin")->required();

    CheckConfig config;
    std::string suite_arg = "all";
    std::string out_path;
    CLI::App* check = app.add_subcommand("check", "run the proposition suites");
    check->add_option("--suite", suite_arg, "suite id or 'all'")->capture_default_str();
    check->add_option("--samples", config.samples, "samples per suite and space")
        ->capture_default_str();
    check->add_option("--seed", config.seed, "random seed")->capture_default_str();
    check->add_option("--tol", config.tol, "kernel tolerance")->capture_default_str();
    check->add_option("--space", config.space, "spherical|euclidean|hyperbolic|all")
        ->capture_default_str();
    check->add_option("--out", out_path, "write the full JSON report here");
    bool list_suites = false;
    check->add_flag("--list", list_suites, "list suite ids and exit");

    std::string fig_id, fig_params_path, fig_out;
    CLI::App* figure = app.add_subcommand("figure", "render a figure as SVG");
    figure->add_option("--id", fig_id, "figure id")->required();
    figure->add_option("--params", fig_params_path, "JSON parameter file (- for stdin)");
    figure->add_option("--out", fig_out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve) {
            std::cout << solve_request_text(read_input(solve_input));
            return 0;
        }
        if (*check) {
            if (list_suites) {
                for (const std::string& id : suite_ids())
                    std::cout << id << "  " << suite_description(id) << "\n";
                return 0;
            }
            if (const char* env = std::getenv("CURVATURA_TOL")) {
                char* end = nullptr;
                double v = std::strtod(env, &end);
                if (end != env && v > 0) config.tol = v;
            }
            config.suites = {suite_arg};
            std::vector<SuiteResult> results = run_suites(config);
            std::cout << report_summary(results);
            if (!out_path.empty()) {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw SchemaError("cannot open output file: " + out_path);
                out << report_json(config, results).dump(2) << "\n";
            }
            return total_failures(results) == 0 ? 0 : 1;
        }
        if (*figure) {
            ojson params = ojson::object();
            if (!fig_params_path.empty()) {
                params = ojson::parse(read_input(fig_params_path), nullptr, false);
                if (params.is_discarded()) throw SchemaError("figure params are not valid JSON");
            }
            std::string svg = render_figure(fig_id, params);
            std::ofstream out(fig_out, std::ios::binary);
            if (!out) throw SchemaError("cannot open output file: " + fig_out);
            out << svg;
            return 0;
        }
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const curvatura::Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
