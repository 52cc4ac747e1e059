#include "qradius/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>

#include "parallel.hpp"
#include "qradius/csv.hpp"

namespace qradius {

namespace {

constexpr double kClosedFormTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::ofstream open_csv(const std::filesystem::path& dir, const std::string& name,
                       std::vector<std::filesystem::path>& written) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorKind::IoError, "cannot create " + dir.string() + ": " + ec.message());
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
    written.push_back(path);
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

double upper_or_inf(BoundKind kind, const BoundInputs& in, QValue q) {
    if (kind == BoundKind::OTH3_UPPER && q.q() == 0.0) return kInf;
    return eval_scalar_bound(kind, in, q);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    // splitmix64 finalizer over the running hash
    std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t case_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = base;
    for (auto p : parts) h = mix(h, p);
    return h;
}

// One worked 2x2 example: exact radius, its closed form, and four bound
// columns alongside their closed forms.
struct WorkedExample {
    Matrix t;
    std::function<double(QValue)> exact;
    std::array<const char*, 4> labels;
    std::array<BoundKind, 4> kinds;
    std::array<std::function<double(QValue)>, 4> closed;
};

WorkedExample example1() {
    const double n = 1.0 / 35.0;
    return {example1_matrix(),
            [](QValue q) { return (1.0 + q.p()) / 70.0; },
            {"eq17", "eq18", "eq19", "eq20"},
            {BoundKind::OTH2, BoundKind::COR2, BoundKind::OTH3_UPPER, BoundKind::COR1},
            {[n](QValue q) {
                 return n * std::sqrt(1.0 - 0.75 * q.q() * q.q() + 2.0 * q.q() * q.p());
             },
             [n](QValue q) { return n * std::sqrt(1.0 - 0.75 * q.q() * q.q() + q.q() * q.p()); },
             [](QValue q) {
                 return q.q() == 0.0 ? kInf : q.q() / (35.0 * std::sqrt(2.0) * (1.0 - q.p()));
             },
             [n](QValue q) { return n * std::sqrt(1.0 - 0.5 * q.q() * q.q() + q.q() * q.p()); }}};
}

WorkedExample example2() {
    const double n = 1.0 / 25.0;
    return {example2_matrix(),
            [](QValue q) { return (61.0 + 11.0 * q.p()) / 1800.0; },
            {"eq21", "eq22", "eq23", "eq24"},
            {BoundKind::OTH2, BoundKind::COR2, BoundKind::OTH3_UPPER, BoundKind::COR1},
            {[n](QValue q) {
                 return n * std::sqrt(1.0 - 23.0 * q.q() * q.q() / 144.0 + 2.0 * q.q() * q.p());
             },
             [n](QValue q) {
                 return n * std::sqrt(1.0 - 23.0 * q.q() * q.q() / 144.0 + q.q() * q.p());
             },
             [](QValue q) {
                 return q.q() == 0.0 ? kInf
                                     : std::sqrt(1921.0 / 2.0) * q.q() / (900.0 * (1.0 - q.p()));
             },
             [n](QValue q) {
                 return n * std::sqrt(1.0 - 671.0 * q.q() * q.q() / 2592.0 + q.q() * q.p());
             }}};
}

struct ExampleRow {
    QValue q;
    double exact;
    std::array<double, 4> bounds;
};

double closed_gap(double value, double closed) {
    if (std::isinf(value) && std::isinf(closed)) return 0.0;
    // Relative near the pole of the q-divided bound, absolute elsewhere.
    return std::abs(value - closed) / std::max(1.0, std::abs(closed));
}

std::vector<ExampleRow> tabulate(const WorkedExample& ex, const RunConfig& cfg, ExampleReport& rep) {
    const auto grid = q_grid(cfg.q_points);
    const BoundInputs in = bound_inputs(ex.t);
    std::vector<ExampleRow> rows(grid.size(), ExampleRow{QValue(0.0), 0.0, {}});
    std::vector<double> closed_err(grid.size()), oracle_err(grid.size());
    const OracleConfig ocfg = cfg.oracle();

    detail::parallel_for(grid.size(), [&](std::size_t i) {
        const QValue q = grid[i];
        ExampleRow row{q, omega_q_2x2_exact(ex.t, q), {}};
        double err = std::abs(row.exact - ex.exact(q));
        for (std::size_t k = 0; k < 4; ++k) {
            row.bounds[k] = upper_or_inf(ex.kinds[k], in, q);
            err = std::max(err, closed_gap(row.bounds[k], ex.closed[k](q)));
        }
        closed_err[i] = err;
        oracle_err[i] = std::abs(row.exact - omega_q_estimate(ex.t, q, ocfg));
        rows[i] = row;
    });
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rep.closed_form_error = std::max(rep.closed_form_error, closed_err[i]);
        rep.oracle_error = std::max(rep.oracle_error, oracle_err[i]);
    }
    return rows;
}

void write_example_csv(const std::filesystem::path& dir, const std::string& name,
                       const WorkedExample& ex, const std::vector<ExampleRow>& rows,
                       bool with_exact, std::initializer_list<std::size_t> columns,
                       ExampleReport& rep) {
    auto out = open_csv(dir, name, rep.files);
    std::vector<std::string> header{"q"};
    if (with_exact) header.emplace_back("omega_q_exact");
    for (auto c : columns) header.emplace_back(ex.labels[c]);
    CsvWriter csv(out, header);
    for (const auto& r : rows) {
        csv.cell(r.q.q());
        if (with_exact) csv.cell(r.exact);
        for (auto c : columns) csv.cell(r.bounds[c]);
        csv.end_row();
    }
    finish(out, rep.files.back());
}

void run_example3(const RunConfig& cfg, ExampleReport& rep) {
    auto out = open_csv(cfg.out_dir, "example3.csv", rep.files);
    CsvWriter csv(out, {"a", "d", "q", "omega_q_hermitian", "formula"});
    const auto grid = q_grid(cfg.q_points);
    const OracleConfig ocfg = cfg.oracle();
    for (auto [a, d] : {std::pair{3.0, 1.0}, std::pair{2.0, 1.0}, std::pair{1.0, 1.0}}) {
        const Matrix h = Matrix::diagonal({Complex{a}, Complex{d}});
        for (const QValue q : grid) {
            const double value = omega_q_hermitian(h, q);
            const double formula = 0.5 * q.q() * (a + d) + 0.5 * std::abs(a - d);
            rep.closed_form_error = std::max(rep.closed_form_error, std::abs(value - formula));
            rep.oracle_error =
                std::max(rep.oracle_error, std::abs(value - omega_q_estimate(h, q, ocfg)));
            csv.cell(a).cell(d).cell(q.q()).cell(value).cell(formula).end_row();
        }
    }
    finish(out, rep.files.back());
}

void run_remark(const RunConfig& cfg, const std::string& name, ExampleReport& rep) {
    const Matrix t = remark_block_matrix();
    const auto one = [&](std::size_t i, std::size_t j) { return Matrix(1, 1, {t(i, j)}); };
    const auto grid = q_grid(cfg.q_points);
    const OracleConfig ocfg = cfg.oracle();

    std::vector<std::array<double, 4>> rows(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        const auto b = eval_block_bounds(one(0, 0), one(0, 1), one(1, 0), one(1, 1), grid[i], ocfg);
        rows[i] = {omega_q_2x2_exact(t, grid[i]), b.lower, b.upper_ii, b.upper_iii};
    });

    auto out = open_csv(cfg.out_dir, name, rep.files);
    CsvWriter csv(out, {"q", "omega_q_exact", "lower", "upper_ii", "upper_iii"});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        csv.cell(grid[i].q());
        for (double v : rows[i]) csv.cell(v);
        csv.end_row();
    }
    finish(out, rep.files.back());
}

}  // namespace

void RunConfig::validate() const {
    if (q_points < 2) throw Error(ErrorKind::InvalidArgument, "q_points must be >= 2");
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tol must be > 0");
    if (restarts < 1) throw Error(ErrorKind::InvalidArgument, "restarts must be >= 1");
}

OracleConfig RunConfig::oracle() const {
    OracleConfig o;
    o.restarts = restarts;
    o.seed = seed;
    return o;
}

RunConfig with_env_seed(RunConfig cfg) {
    const char* env = std::getenv("QRADIUS_SEED");
    if (env == nullptr || *env == '\0') return cfg;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw Error(ErrorKind::InvalidArgument, "QRADIUS_SEED must be an integer");
    cfg.seed = v;
    return cfg;
}

Matrix example1_matrix() { return Matrix{{0.0, 1.0 / 35.0}, {0.0, 0.0}}; }

Matrix example2_matrix() { return Matrix{{0.0, 1.0 / 25.0}, {1.0 / 36.0, 0.0}}; }

Matrix remark_block_matrix() {
    return Matrix{{Complex{1.5442, 1.4193}, Complex{0.0859, 0.2916}},
                  {Complex{-1.4916, 0.1978}, Complex{-0.7423, 1.5877}}};
}

ExampleId parse_example_id(std::string_view name) {
    for (auto id : {ExampleId::example1, ExampleId::example2, ExampleId::example3,
                    ExampleId::figures, ExampleId::remark33}) {
        if (name == to_string(id)) return id;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown example '" + std::string(name) + "'");
}

const char* to_string(ExampleId id) noexcept {
    switch (id) {
        case ExampleId::example1: return "example1";
        case ExampleId::example2: return "example2";
        case ExampleId::example3: return "example3";
        case ExampleId::figures: return "figures";
        case ExampleId::remark33: return "remark33";
    }
    return "unknown";
}

ExampleReport run_example(ExampleId id, const RunConfig& cfg) {
    cfg.validate();
    ExampleReport rep;
    const auto& dir = cfg.out_dir;
    switch (id) {
        case ExampleId::example1: {
            const auto ex = example1();
            write_example_csv(dir, "example1.csv", ex, tabulate(ex, cfg, rep), true, {0, 1, 2, 3}, rep);
            break;
        }
        case ExampleId::example2: {
            const auto ex = example2();
            write_example_csv(dir, "example2.csv", ex, tabulate(ex, cfg, rep), true, {0, 1, 2, 3}, rep);
            break;
        }
        case ExampleId::example3:
            run_example3(cfg, rep);
            break;
        case ExampleId::figures: {
            int fig = 1;
            for (const auto& ex : {example1(), example2()}) {
                const auto rows = tabulate(ex, cfg, rep);
                const auto name = [&] { return "fig" + std::to_string(fig++) + ".csv"; };
                write_example_csv(dir, name(), ex, rows, true, {0, 1}, rep);
                write_example_csv(dir, name(), ex, rows, true, {2, 3}, rep);
                write_example_csv(dir, name(), ex, rows, false, {1, 3}, rep);
            }
            run_remark(cfg, "fig7.csv", rep);
            break;
        }
        case ExampleId::remark33:
            run_remark(cfg, "remark33.csv", rep);
            break;
    }
    rep.ok = rep.closed_form_error <= kClosedFormTol && rep.oracle_error <= cfg.tol;
    return rep;
}

namespace {

struct VerifyRow {
    std::string family;
    std::size_t case_id = 0;
    std::string ensemble;
    std::size_t n = 0;
    double q = 0.0;
    std::optional<double> alpha;
    std::string tag;
    double value = 0.0;
    double reference = 0.0;
    double margin = 0.0;
    std::string status;
};

enum class Family : std::uint64_t { scalar = 1, product = 2, block = 3 };

struct VerifyCase {
    Family family;
    Ensemble ensemble;
    std::size_t n;
    std::size_t index;
    std::uint64_t seed;
};

constexpr std::array<Ensemble, 4> kEnsembles = {Ensemble::general, Ensemble::hermitian,
                                                Ensemble::nilpotent2, Ensemble::normal};

VerifyRow row_base(const char* family, std::size_t case_id, std::string ensemble, std::size_t n) {
    VerifyRow r;
    r.family = family;
    r.case_id = case_id;
    r.ensemble = std::move(ensemble);
    r.n = n;
    return r;
}

// margin >= -tol passes; "note" rows are informational.
void push(std::vector<VerifyRow>& rows, VerifyRow r, double tol) {
    r.status = r.margin >= -tol ? "ok" : "VIOLATION";
    rows.push_back(std::move(r));
}

void scalar_case(const VerifyCase& c, const std::vector<QValue>& grid, const RunConfig& cfg,
                 const VerifyOptions& opt, std::vector<VerifyRow>& rows) {
    const Matrix t = random_matrix(c.n, c.ensemble, c.seed);
    const auto reports = compare_bounds(t, grid, cfg.oracle(), cfg.tol);
    const VerifyRow base = row_base("scalar", c.index, to_string(c.ensemble), c.n);

    for (const auto& r : reports) {
        VerifyRow row = base;
        row.q = r.q.q();
        row.reference = r.oracle;
        for (const auto& e : r.entries) {
            row.tag = to_string(e.kind);
            row.value = e.value;
            row.margin = e.is_upper ? e.value - r.oracle : r.oracle - e.value;
            push(rows, row, cfg.tol);
        }
        row.tag = "TH5_LINEAR";
        row.value = r.th5_linear;
        row.margin = r.th5_linear - r.oracle;
        row.status = r.th5_linear_below_oracle ? "note" : "ok";
        rows.push_back(row);

        // Refinement chains: value (refined) <= reference (coarser).
        const auto chain = [&](BoundKind fine, BoundKind coarse) {
            const auto f = r.value(fine);
            const auto g = r.value(coarse);
            if (!f || !g) return;
            VerifyRow ch = base;
            ch.family = "chain";
            ch.q = r.q.q();
            ch.tag = std::string(to_string(fine)) + "<=" + to_string(coarse);
            ch.value = *f;
            ch.reference = *g;
            ch.margin = *g - *f;
            push(rows, ch, opt.chain_tol);
        };
        chain(BoundKind::COR2, BoundKind::OTH2);
        chain(BoundKind::TH5, BoundKind::TH2);
        chain(BoundKind::COR3, BoundKind::COR2);
        chain(BoundKind::COR4, BoundKind::COR1);
        chain(BoundKind::COR1, BoundKind::OTH3_UPPER);
        chain(BoundKind::TH2, BoundKind::COR2);
    }
}

void product_case(const VerifyCase& c, const std::vector<QValue>& grid, const RunConfig& cfg,
                  std::vector<VerifyRow>& rows) {
    const auto m = [&](std::uint64_t k) { return random_matrix(2, c.ensemble, mix(c.seed, k)); };
    const ProductOperands ops{m(0), m(1), m(2), m(3), m(4), m(5)};
    const Matrix prod = ops.product();
    const VerifyRow base = row_base("product", c.index, to_string(c.ensemble), 2);

    for (const QValue q : grid) {
        const double oracle = omega_q_2x2_exact(prod, q);
        for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            VerifyRow row = base;
            row.q = q.q();
            row.alpha = a;
            row.reference = oracle;
            row.tag = "PRODUCT_Q";
            row.value = eval_product_bound_q(ops, AlphaParam(a), q);
            row.margin = row.value - oracle;
            push(rows, row, cfg.tol);
            row.tag = "PRODUCT_QFREE";
            row.value = eval_product_bound_qfree(ops, AlphaParam(a));
            row.margin = row.value - oracle;
            push(rows, row, cfg.tol);
        }
    }
}

void block_case(const VerifyCase& c, const std::vector<QValue>& grid, const RunConfig& cfg,
                std::vector<VerifyRow>& rows) {
    // Block sizes cycle through (1,1), (1,2), (2,1), (2,2).
    const std::size_t na = 1 + (c.index & 1);
    const std::size_t nd = 1 + ((c.index >> 1) & 1);
    const Matrix full = random_matrix(na + nd, Ensemble::general, c.seed);
    const auto sub = [&](std::size_t r0, std::size_t c0, std::size_t r, std::size_t k) {
        Matrix out(r, k);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j) out(i, j) = full(r0 + i, c0 + j);
        return out;
    };
    const Matrix a = sub(0, 0, na, na), b = sub(0, na, na, nd);
    const Matrix cc = sub(na, 0, nd, na), d = sub(na, na, nd, nd);
    const Matrix diag_part = block_compose(a, Matrix(na, nd), Matrix(nd, na), d);
    const Matrix off_part = block_compose(Matrix::zeros(na), b, cc, Matrix::zeros(nd));
    const OracleConfig ocfg = cfg.oracle();
    const VerifyRow base = row_base("block", c.index, "general", na + nd);

    for (const QValue q : grid) {
        const double oracle = omega_q(full, q, ocfg);
        const auto bb = eval_block_bounds(a, b, cc, d, q, ocfg);
        VerifyRow row = base;
        row.q = q.q();
        row.reference = oracle;
        const auto emit = [&](const char* tag, double value, bool upper) {
            row.tag = tag;
            row.value = value;
            row.margin = upper ? value - oracle : oracle - value;
            push(rows, row, cfg.tol);
        };
        emit("BLOCK_LOWER", bb.lower, false);
        emit("BLOCK_UPPER_II", bb.upper_ii, true);
        emit("BLOCK_UPPER_III", bb.upper_iii, true);
        emit("BLOCK_DIAG_PART", omega_q(diag_part, q, ocfg), false);
        emit("BLOCK_OFFDIAG_PART", omega_q(off_part, q, ocfg), false);
    }
}

}  // namespace

VerifySummary run_random_verify(const RunConfig& cfg, const VerifyOptions& opt) {
    cfg.validate();
    if (opt.count < 0) throw Error(ErrorKind::InvalidArgument, "count must be >= 0");
    for (int n : opt.sizes) {
        if (n < 2) throw Error(ErrorKind::BadDimension, "verify sizes must be >= 2");
    }
    const auto grid = q_grid(opt.q_points);
    const auto count = static_cast<std::size_t>(opt.count);

    std::vector<VerifyCase> cases;
    for (Ensemble e : kEnsembles) {
        for (int n : opt.sizes) {
            for (std::size_t i = 0; i < count; ++i) {
                const auto s = case_seed(cfg.seed, {std::uint64_t(Family::scalar),
                                                    std::uint64_t(e), std::uint64_t(n), i});
                cases.push_back({Family::scalar, e, std::size_t(n), i, s});
            }
        }
    }
    for (Ensemble e : kEnsembles) {
        for (std::size_t i = 0; i < count; ++i) {
            const auto s = case_seed(cfg.seed, {std::uint64_t(Family::product), std::uint64_t(e), i});
            cases.push_back({Family::product, e, 2, i, s});
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        const auto s = case_seed(cfg.seed, {std::uint64_t(Family::block), i});
        cases.push_back({Family::block, Ensemble::general, 0, i, s});
    }

    std::vector<std::vector<VerifyRow>> buffers(cases.size());
    detail::parallel_for(cases.size(), [&](std::size_t k) {
        const auto& c = cases[k];
        switch (c.family) {
            case Family::scalar: scalar_case(c, grid, cfg, opt, buffers[k]); break;
            case Family::product: product_case(c, grid, cfg, buffers[k]); break;
            case Family::block: block_case(c, grid, cfg, buffers[k]); break;
        }
    });

    VerifySummary summary;
    std::vector<std::filesystem::path> written;
    auto out = open_csv(cfg.out_dir, "verify.csv", written);
    summary.csv = written.front();
    CsvWriter csv(out, {"family", "case", "ensemble", "n", "q", "alpha", "tag", "value",
                        "reference", "margin", "status"});
    for (const auto& buf : buffers) {
        for (const auto& r : buf) {
            csv.cell(r.family).cell(r.case_id).cell(r.ensemble).cell(r.n).cell(r.q);
            if (r.alpha) csv.cell(*r.alpha);
            else csv.cell(std::string());
            csv.cell(r.tag).cell(r.value).cell(r.reference).cell(r.margin).cell(r.status);
            csv.end_row();
            ++summary.rows;
            if (r.status == "VIOLATION") ++summary.violations;
            if (r.status == "note") ++summary.th5_linear_below_oracle;
        }
    }
    finish(out, summary.csv);
    return summary;
}

std::vector<BoundReport> run_bounds(const MatrixFile& file, const RunConfig& cfg,
                                    std::filesystem::path* written) {
    cfg.validate();
    const auto reports = compare_bounds(file.matrix, q_grid(cfg.q_points), cfg.oracle(), cfg.tol);

    std::vector<std::filesystem::path> files;
    const std::string stem = file.name.empty() ? "matrix" : file.name;
    auto out = open_csv(cfg.out_dir, stem + "_bounds.csv", files);
    std::vector<std::string> header{"q", "oracle", "oracle_kind"};
    for (BoundKind k : kAllBoundKinds) header.emplace_back(to_string(k));
    header.emplace_back("TH5_LINEAR");
    header.emplace_back("violations");
    CsvWriter csv(out, header);
    for (const auto& r : reports) {
        csv.cell(r.q.q()).cell(r.oracle).cell(std::string(to_string(r.oracle_kind)));
        for (BoundKind k : kAllBoundKinds) csv.cell(r.value(k).value_or(kInf));
        csv.cell(r.th5_linear);
        std::string tags;
        for (BoundKind v : r.violations) tags += (tags.empty() ? "" : ";") + std::string(to_string(v));
        csv.cell(tags).end_row();
    }
    finish(out, files.front());
    if (written) *written = files.front();
    return reports;
}

void emit_range(const Matrix& t, QValue q, int resolution, std::ostream& out,
                const OracleConfig& cfg) {
    const auto sample = wq_boundary(t, q, resolution, cfg);
    CsvWriter csv(out, {"idx", "re", "im"});
    for (std::size_t i = 0; i < sample.points.size(); ++i) {
        csv.cell(i).cell(sample.points[i].real()).cell(sample.points[i].imag()).end_row();
    }
    if (!out) throw Error(ErrorKind::IoError, "range output failed");
}

}  // namespace qradius
