#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qradius/experiments.hpp"

using namespace qradius;

namespace {

int cmd_bounds(const std::string& path, RunConfig cfg) {
    const auto file = read_matrix_file(path);
    std::filesystem::path written;
    const auto reports = run_bounds(file, cfg, &written);
    std::size_t bad = 0;
    for (const auto& r : reports) bad += r.violations.size();
    std::cout << "wrote " << written.string() << " (" << reports.size() << " q values, oracle "
              << to_string(reports.front().oracle_kind) << ", " << bad << " violations)\n";
    return bad == 0 ? 0 : 1;
}

int cmd_reproduce(const std::string& which, const RunConfig& cfg) {
    const auto rep = run_example(parse_example_id(which), cfg);
    for (const auto& f : rep.files) std::cout << "wrote " << f.string() << "\n";
    std::printf("closed-form error %.3e, oracle error %.3e: %s\n", rep.closed_form_error,
                rep.oracle_error, rep.ok ? "ok" : "MISMATCH");
    return rep.ok ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, const VerifyOptions& opt) {
    const auto s = run_random_verify(cfg, opt);
    std::cout << "wrote " << s.csv.string() << " (" << s.rows << " rows)\n"
              << "violations: " << s.violations << "\n"
              << "TH5 with linear Crawford term below oracle: " << s.th5_linear_below_oracle << "\n";
    return s.ok() ? 0 : 1;
}

int cmd_range(const std::string& path, double q, int resolution, const RunConfig& cfg) {
    const auto file = read_matrix_file(path);
    emit_range(file.matrix, QValue(q), resolution, std::cout, cfg.oracle());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-numerical radius bounds and experiments"};
    app.require_subcommand(1);

    RunConfig cfg;
    VerifyOptions vopt;
    std::string matrix_path;
    std::string which;
    double q = 0.0;
    int resolution = 256;

    auto* bounds = app.add_subcommand("bounds", "compare every bound against the oracle on a q grid");
    bounds->add_option("matrix", matrix_path, "matrix JSON file")->required()->check(CLI::ExistingFile);
    bounds->add_option("--q-points", cfg.q_points, "grid size")->check(CLI::Range(2, 100000));
    bounds->add_option("--seed", cfg.seed, "optimizer seed");
    bounds->add_option("--out", cfg.out_dir, "output directory");

    auto* reproduce = app.add_subcommand("reproduce", "regenerate the worked examples and figure data");
    reproduce->add_option("which", which, "example1|example2|example3|figures|remark33")
        ->required()
        ->check(CLI::IsMember({"example1", "example2", "example3", "figures", "remark33"}));
    reproduce->add_option("--out", cfg.out_dir, "output directory");

    auto* verify = app.add_subcommand("verify", "randomized bound campaign");
    verify->add_option("--count", vopt.count, "matrices per size and ensemble")->check(CLI::NonNegativeNumber);
    verify->add_option("--sizes", vopt.sizes, "matrix sizes")->delimiter(',')->check(CLI::Range(2, 64));
    verify->add_option("--tol", cfg.tol, "sandwich tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "campaign seed");
    verify->add_option("--out", cfg.out_dir, "output directory");

    auto* range = app.add_subcommand("range", "print boundary points of W_q(T) as CSV");
    range->add_option("matrix", matrix_path, "matrix JSON file")->required()->check(CLI::ExistingFile);
    range->add_option("--q", q, "q in [0,1]")->required()->check(CLI::Range(0.0, 1.0));
    range->add_option("--resolution", resolution, "number of boundary samples")->check(CLI::Range(16, 1 << 20));

    CLI11_PARSE(app, argc, argv);

    try {
        cfg = with_env_seed(cfg);
        if (*bounds) return cmd_bounds(matrix_path, cfg);
        if (*reproduce) return cmd_reproduce(which, cfg);
        if (*verify) return cmd_verify(cfg, vopt);
        if (*range) return cmd_range(matrix_path, q, resolution, cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
