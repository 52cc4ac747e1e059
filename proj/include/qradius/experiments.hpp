#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qradius/bounds.hpp"
#include "qradius/matrix_io.hpp"

namespace qradius {

struct RunConfig {
    int q_points = 101;
    std::uint64_t seed = 42;
    double tol = 1e-6;
    int restarts = 64;
    std::filesystem::path out_dir = ".";

    void validate() const;
    OracleConfig oracle() const;
};

/// Returns cfg with its seed replaced by $QRADIUS_SEED when that is set.
RunConfig with_env_seed(RunConfig cfg);

Matrix example1_matrix();  // [[0, 1/35], [0, 0]]
Matrix example2_matrix();  // [[0, 1/25], [1/36, 0]]
Matrix remark_block_matrix();  // printed 2x2 test matrix for the block bounds

enum class ExampleId { example1, example2, example3, figures, remark33 };

ExampleId parse_example_id(std::string_view name);
const char* to_string(ExampleId id) noexcept;

struct ExampleReport {
    std::vector<std::filesystem::path> files;
    double closed_form_error = 0.0;  // worst |column - closed form|
    double oracle_error = 0.0;       // worst |omega_q_exact - omega_q_estimate|
    bool ok = true;                  // closed_form_error <= 1e-12 and oracle_error <= tol
};

ExampleReport run_example(ExampleId id, const RunConfig& cfg);

struct VerifyOptions {
    int count = 50;
    std::vector<int> sizes{2, 3, 4};
    int q_points = 11;
    double chain_tol = 1e-10;
};

struct VerifySummary {
    std::filesystem::path csv;
    std::size_t rows = 0;
    std::size_t violations = 0;
    std::size_t th5_linear_below_oracle = 0;  // informational, not a violation

    bool ok() const noexcept { return violations == 0; }
};

/// Random campaign over every ensemble and size: scalar sandwich, refinement
/// chains, product bounds on 2x2 sextuples and block bounds on block
/// quadruples. Writes verify.csv into cfg.out_dir.
VerifySummary run_random_verify(const RunConfig& cfg, const VerifyOptions& opt);

/// Writes "<name>_bounds.csv" into cfg.out_dir and returns the reports.
std::vector<BoundReport> run_bounds(const MatrixFile& file, const RunConfig& cfg,
                                    std::filesystem::path* written = nullptr);

/// CSV "idx,re,im" of the sampled boundary of W_q(T).
void emit_range(const Matrix& t, QValue q, int resolution, std::ostream& out,
                const OracleConfig& cfg = {});

}  // namespace qradius
