// Command-line driver: verification batteries and figure-ready data tables
// on top of the cgpot core library.

#include "output.hpp"

#include "cgpot/bounds.hpp"
#include "cgpot/cg.hpp"
#include "cgpot/constants.hpp"
#include "cgpot/discretizer.hpp"
#include "cgpot/equilibrium.hpp"
#include "cgpot/errors.hpp"
#include "cgpot/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

using nlohmann::json;

namespace cgpot::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitProperty = 3;

// ---------------------------------------------------------------------------
// config file merging: flags win over config keys

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw std::domain_error("config file not found: " + path);
    json j;
    in >> j;
    if (!j.is_object()) throw std::domain_error("config file must hold a JSON object");
    return j;
}

template <typename T>
void merge_option(const CLI::Option* opt, const json& cfg, const char* key, T& value) {
    if (opt != nullptr && opt->count() > 0) return; // explicit flag wins
    auto it = cfg.find(key);
    if (it == cfg.end()) return;
    value = it->get<T>();
}

// ---------------------------------------------------------------------------
// density / spectrum selection

struct NamedDensity {
    std::string label;
    ArcsineWeightedDensity density;
};

ArcsineWeightedDensity equilibrium_reference_density(int k) {
    // The canonical pushed problem: one unit atom at 0, Sigma = [0.1, 1].
    ExternalFieldProblem p(k, AtomicMeasure::unit_masses({0.0}), Interval(0.1, 1.0));
    return solve_equilibrium(p).density_g;
}

std::vector<NamedDensity> density_set(const std::string& family,
                                      const std::vector<double>& thetas, int k) {
    std::vector<NamedDensity> out;
    const bool all = family == "all";
    if (all || family == "chebyshev")
        out.push_back({"chebyshev", flat_density(Interval(-1.0, 1.0))});
    if (all || family == "power")
        for (double theta : thetas) {
            char label[32];
            std::snprintf(label, sizeof(label), "power(%g)", theta);
            out.push_back({label, power_density(theta)});
        }
    if (all || family == "equilibrium") {
        char label[40];
        std::snprintf(label, sizeof(label), "equilibrium(k=%d)", k);
        out.push_back({label, equilibrium_reference_density(k)});
    }
    if (out.empty())
        throw std::domain_error("unknown density family: " + family +
                                " (expected chebyshev|power|equilibrium|all)");
    return out;
}

SpectralDensity spectral_family(const std::string& family, double beta, double b) {
    if (family == "example11") return make_example11();
    if (family == "example12") return make_example12(beta, b);
    throw std::domain_error("unknown spectral family: " + family +
                            " (expected example11|example12)");
}

// ---------------------------------------------------------------------------
// verify-constants

struct CheckAggregate {
    bool pass = true;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::string location = "-";
};

class CheckSet {
public:
    void offer(const std::string& name, double margin, const std::string& location,
               double tolerance = 1e-9) {
        CheckAggregate& agg = checks_[name];
        if (margin < agg.worst_margin) {
            agg.worst_margin = margin;
            agg.location = location;
        }
        if (margin < -tolerance) agg.pass = false;
    }

    bool all_pass() const {
        for (const auto& [name, agg] : checks_)
            if (!agg.pass) return false;
        return true;
    }

    json to_json() const {
        json checks = json::array();
        for (const auto& [name, agg] : checks_)
            checks.push_back({{"name", name},
                              {"pass", agg.pass},
                              {"worst_margin", agg.worst_margin},
                              {"location", agg.location}});
        return checks;
    }

private:
    std::map<std::string, CheckAggregate> checks_;
};

void sweep_certificate(CheckSet& checks, const NamedDensity& nd, int k, int grid,
                       unsigned seed) {
    const ArcsineWeightedDensity& d = nd.density;
    const Interval& I = d.interval;
    char where[64];
    std::snprintf(where, sizeof(where), "%s k=%d", nd.label.c_str(), k);

    const DiscretizationCertificate cert = build_partition(d, k);

    for (const AuditEntry& e : audit_partition(cert).entries)
        checks.offer("partition: " + e.check, e.worst_margin,
                     std::string(where) + " " + e.location);

    // Mean value property sweep.
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(I.a, I.b);
    const bool flat = nd.label == "chebyshev";
    for (int i = 0; i < grid * 10; ++i) {
        const double x = unif(rng), t = unif(rng);
        if (std::abs(x - t) < 1e-12 * I.length()) continue;
        const double q = mean_value_check(d, k, x, t).quotient;
        checks.offer("mean value quotient lower", q - constants::kMeanLower, where, 1e-12);
        checks.offer("mean value quotient upper", constants::kMeanUpper - q, where, 1e-12);
        if (flat) {
            checks.offer("mean value flat lower", q - 1.0, where, 1e-10);
            checks.offer("mean value flat upper", constants::kMeanUpperFlat - q, where, 1e-10);
        }
    }

    // Three-sum decomposition across the support.
    for (int i = 0; i < grid; ++i) {
        const double x = I.a + I.length() * (i + 0.5) / grid;
        const ThreeSums sums = three_sums(cert, x);
        checks.offer("sum1 cap", constants::kSum1Cap - sums.sum1, where, 1e-6);
        checks.offer("sum2 cap", constants::kSum2Cap - sums.sum2, where, 1e-6);
        checks.offer("sum3 cap", constants::kSum3Cap - sums.sum3, where, 1e-6);
        checks.offer("total cap", constants::kSharpnessConstant - sums.total(), where, 1e-6);
        const double err = discretization_error(cert, x);
        checks.offer("sum decomposition dominates error", sums.total() - err, where, 1e-7);
    }

    // Two-sided behavior of the discretization error.
    for (int i = 0; i < grid / 2; ++i) {
        const double offset = 4.0 * I.length() * (i + 0.5) / (grid / 2);
        const double right = I.b + offset, left = I.a - offset;
        const double err_r = discretization_error(cert, right);
        const double err_l = discretization_error(cert, left);
        checks.offer("exterior error nonnegative", std::min(err_r, err_l), where, 1e-7);
        const double zr = I.normalized(right);
        const double cap = std::cbrt(3.0 * M_PI / (2.0 * k)) / (zr * zr - 1.0);
        checks.offer("right tail bound", cap - err_r, where, 1e-8);
    }
    for (int j = 0; j <= k; ++j)
        checks.offer("partition point error nonnegative",
                     discretization_error(cert, cert.partition[j]), where, 1e-8);

    const double sup1 = observed_sup_error(cert, 1);
    const double sup2 = observed_sup_error(cert, 2);
    checks.offer("support error cap", constants::kSharpnessConstant - sup1, where, 1e-6);
    checks.offer("sup refinement stability", 0.01 - std::abs(sup1 - sup2) / std::abs(sup1),
                 where, 0.0);
}

int cmd_verify_constants(const std::string& family, const std::vector<double>& thetas,
                         const std::vector<int>& k_list, int grid, const std::string& out,
                         const std::string& format) {
    if (format != "json")
        throw std::domain_error("verify-constants emits a JSON report; use --format json");

    // Admissibility precheck before any heavy sweeps.
    json runs = json::array();
    for (int k : k_list) {
        if (k < 2) throw std::domain_error("verify-constants: k must be >= 2");
        for (const NamedDensity& nd : density_set(family, thetas, k)) {
            const DensityAudit audit = check_admissibility(nd.density);
            if (!audit.ok) {
                std::cerr << "density " << nd.label
                          << " failed admissibility: " << audit.diagnostic << "\n";
                return kExitValidation;
            }
        }
    }

    CheckSet checks;
    unsigned seed = 20240901;
    for (int k : k_list)
        for (const NamedDensity& nd : density_set(family, thetas, k)) {
            sweep_certificate(checks, nd, k, grid, seed++);
            runs.push_back(nd.label + " k=" + std::to_string(k));
        }

    json report;
    report["all_pass"] = checks.all_pass();
    report["checks"] = checks.to_json();
    report["runs"] = runs;
    const std::string text = report.dump(2) + "\n";
    if (out.empty()) std::cout << text;
    else write_file(out, text);
    return checks.all_pass() ? kExitOk : kExitProperty;
}

// ---------------------------------------------------------------------------
// shared bound-table assembly for `figure` and `bounds`

Table bounds_table(const SpectralDensity& s, int N, int n_max, double C, int digits,
                   const std::vector<int>& d_list, bool with_cg, bool with_envelope) {
    const SpectrumSample sample = generate_spectrum(s, N);
    const std::vector<double>& lam = sample.eigenvalues;
    const double b = s.support.b;

    ErrorCurve cg;
    if (with_cg) cg = run_cg(DiagonalSystem{lam, {}}, n_max, Precision::extended(digits));
    const std::vector<IntegralBoundValue> integral = integral_bound_curve(s, N, n_max, C);
    BoundCurve env;
    if (with_envelope) env = envelope(lam, 1, n_max, b, C);

    Table t;
    t.columns = {"n", "cg_error", "cond_bound", "integral_bound"};
    for (int d : d_list) t.columns.push_back("outlier_bound_d" + std::to_string(d));
    t.columns.push_back("envelope");
    t.columns.push_back("thsuper_bound");
    t.columns.push_back("d_used");

    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::optional<double>> row;
        row.emplace_back(double(n));
        if (with_cg && n < static_cast<int>(cg.values.size()))
            row.emplace_back(cg.values[n]);
        else
            row.emplace_back(std::nullopt);
        row.emplace_back(std::exp(C) * cond_number_bound(lam.front(), lam.back(), n));
        row.emplace_back(integral[n].value);
        for (int d : d_list) {
            if (n > d + 1)
                row.emplace_back(corollary_bound(lam, d, n, b, C));
            else
                row.emplace_back(std::nullopt);
        }
        if (with_envelope && env.points[n - 1].feasible)
            row.emplace_back(env.points[n - 1].value);
        else
            row.emplace_back(std::nullopt);
        try {
            const ThSuperBound tb = thsuper_bound(s, N, n, lam, C);
            row.emplace_back(tb.value);
            row.emplace_back(double(tb.d));
        } catch (const std::exception&) {
            row.emplace_back(std::nullopt);
            row.emplace_back(std::nullopt);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

int cmd_figure(int which, int N, int n_max, double C, int digits, double beta, bool beta_given,
               const std::string& out, const std::string& format) {
    if (which < 1 || which > 3)
        throw std::domain_error("figure: --which must be 1, 2 or 3");
    n_max = std::min(n_max, N);
    const std::string ext = format == "json" ? ".json" : ".csv";

    if (which == 1) {
        Table t = bounds_table(make_example11(), N, n_max, C, digits, {}, true, false);
        write_file(out + ext, render_table(t, format));
        std::cout << out + ext << "\n";
        return kExitOk;
    }
    if (which == 2) {
        Table t = bounds_table(make_example11(), N, n_max, C, digits, {0, 1, 2, 5, 10, 15},
                               true, true);
        write_file(out + ext, render_table(t, format));
        std::cout << out + ext << "\n";
        return kExitOk;
    }
    const std::vector<double> betas = beta_given ? std::vector<double>{beta}
                                                 : std::vector<double>{0.5, 1.0};
    for (double be : betas) {
        Table t = bounds_table(make_example12(be, 1.0), N, n_max, C, digits, {}, true, false);
        char suffix[32];
        std::snprintf(suffix, sizeof(suffix), "_beta%g", be);
        write_file(out + suffix + ext, render_table(t, format));
        std::cout << out + suffix + ext << "\n";
    }
    return kExitOk;
}

int cmd_bounds(const std::string& family, double beta, double b, int N, int n_max, double C,
               const std::vector<int>& d_list, const std::string& out,
               const std::string& format) {
    const SpectralDensity s = spectral_family(family, beta, b);
    n_max = std::min(n_max, N);
    Table t = bounds_table(s, N, n_max, C, 64, d_list, false, true);
    const std::string ext = format == "json" ? ".json" : ".csv";
    write_file(out + ext, render_table(t, format));
    std::cout << out + ext << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// cg

int cmd_cg(const std::string& family, double beta, double b, int N, int n_max, int digits,
           const std::string& out, const std::string& format) {
    const SpectralDensity s = spectral_family(family, beta, b);
    n_max = std::min(n_max, N);
    const SpectrumSample sample = generate_spectrum(s, N);
    const DiagonalSystem sys{sample.eigenvalues, {}};

    const ErrorCurve extended = run_cg(sys, n_max, Precision::extended(digits));
    const ErrorCurve dbl = run_cg(sys, n_max, Precision::dbl());
    std::vector<double> oracle;
    const bool with_oracle = N <= 200;
    if (with_oracle)
        oracle = weighted_error_curve(sample.eigenvalues, n_max, Precision::extended(digits));

    Table t;
    t.columns = {"n", "e_n", "e_n_double"};
    if (with_oracle) t.columns.push_back("oracle_e_n");
    for (int n = 0; n <= n_max; ++n) {
        std::vector<std::optional<double>> row;
        row.emplace_back(double(n));
        if (n < static_cast<int>(extended.values.size())) row.emplace_back(extended.values[n]);
        else row.emplace_back(std::nullopt);
        if (n < static_cast<int>(dbl.values.size())) row.emplace_back(dbl.values[n]);
        else row.emplace_back(std::nullopt);
        if (with_oracle) row.emplace_back(oracle[n]);
        t.rows.push_back(std::move(row));
    }
    const std::string ext = format == "json" ? ".json" : ".csv";
    write_file(out + ext, render_table(t, format));
    std::cout << out + ext << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// discretize

int cmd_discretize(const std::string& family, double theta, int k, int grid,
                   const std::string& out, const std::string& format) {
    if (k < 2) {
        std::cerr << "discretize: k must be >= 2\n";
        return kExitValidation;
    }
    std::vector<NamedDensity> set = density_set(family == "all" ? "chebyshev" : family,
                                                {theta}, k);
    const NamedDensity& nd = set.front();
    const DensityAudit density_audit = check_admissibility(nd.density);
    if (!density_audit.ok) {
        std::cerr << "density failed admissibility: " << density_audit.diagnostic << "\n";
        return kExitValidation;
    }

    const DiscretizationCertificate cert = build_partition(nd.density, k);
    const Interval& I = cert.interval();
    const std::string ext = format == "json" ? ".json" : ".csv";

    Table part;
    part.columns = {"j", "t_j", "alpha_j", "xi_j"};
    for (int j = 0; j <= k; ++j) {
        std::vector<std::optional<double>> row{double(j), cert.partition[j], cert.angles[j],
                                               std::nullopt};
        if (j < k) row[3] = cert.nodes[j];
        part.rows.push_back(std::move(row));
    }
    write_file(out + "_partition" + ext, render_table(part, format));

    Table gridtab;
    gridtab.columns = {"x", "error", "sum1", "sum2", "sum3"};
    double sum1_max = 0, sum2_max = -1e300, sum3_max = 0, exterior_min = 1e300;
    for (int i = 0; i < grid; ++i) {
        const double x = I.a + I.length() * (i + 0.5) / grid;
        const ThreeSums sums = three_sums(cert, x);
        sum1_max = std::max(sum1_max, sums.sum1);
        sum2_max = std::max(sum2_max, sums.sum2);
        sum3_max = std::max(sum3_max, sums.sum3);
        gridtab.rows.push_back({x, discretization_error(cert, x), sums.sum1, sums.sum2,
                                sums.sum3});
    }
    for (int i = 0; i < grid / 2; ++i) {
        const double offset = 4.0 * I.length() * (i + 0.5) / (grid / 2);
        for (const double x : {I.a - offset, I.b + offset}) {
            const double err = discretization_error(cert, x);
            exterior_min = std::min(exterior_min, err);
            gridtab.rows.push_back({x, err, std::nullopt, std::nullopt, std::nullopt});
        }
    }
    write_file(out + "_grid" + ext, render_table(gridtab, format));

    const PartitionAudit audit = audit_partition(cert);
    const double sup1 = observed_sup_error(cert, 1);
    const double sup2 = observed_sup_error(cert, 2);
    json audits = json::array();
    for (const AuditEntry& e : audit.entries)
        audits.push_back({{"name", e.check},
                          {"pass", e.pass},
                          {"worst_margin", e.worst_margin},
                          {"location", e.location}});
    json summary = {{"family", nd.label},
                    {"k", k},
                    {"observed_sup", sup1},
                    {"observed_sup_refined", sup2},
                    {"exterior_min", exterior_min},
                    {"sum_maxima",
                     {{"sum1", sum1_max},
                      {"sum2", sum2_max},
                      {"sum3", sum3_max},
                      {"total", sum1_max + sum2_max + sum3_max}}},
                    {"audit", audits},
                    {"audit_all_pass", audit.all_pass}};
    write_file(out + "_summary.json", summary.dump(2) + "\n");
    std::cout << out + "_partition" + ext << "\n"
              << out + "_grid" + ext << "\n"
              << out + "_summary.json" << "\n";
    return audit.all_pass ? kExitOk : kExitProperty;
}

// ---------------------------------------------------------------------------

int dispatch(int argc, char** argv) {
    CLI::App app{"equilibrium measures, potential discretization certificates, and "
                 "conjugate-gradient convergence bounds"};
    app.require_subcommand(1);
    app.fallthrough(); // parent flags (--config) may follow the subcommand

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; explicit flags win");

    // verify-constants
    auto* verify = app.add_subcommand("verify-constants",
                                      "run the inequality battery over density families");
    std::string v_family = "all", v_out, v_format = "json";
    std::vector<double> v_thetas{0.25, 0.5, 1.0};
    std::vector<int> v_k{2, 4, 8, 16, 32};
    int v_grid = 1000;
    auto* v_family_o = verify->add_option("--family", v_family, "chebyshev|power|equilibrium|all");
    auto* v_beta_o = verify->add_option("--beta", v_thetas, "power-density exponents");
    auto* v_k_o = verify->add_option("--k", v_k, "certificate degrees");
    auto* v_grid_o = verify->add_option("--grid", v_grid, "sweep grid size");
    auto* v_out_o = verify->add_option("--out", v_out, "report path (stdout when empty)");
    auto* v_format_o = verify->add_option("--format", v_format, "json");

    // figure
    auto* figure = app.add_subcommand("figure", "emit figure-ready data tables");
    int f_which = 1, f_N = 1000, f_nmax = 140, f_digits = 64;
    double f_C = 0.0, f_beta = 0.5;
    std::string f_out = "figure", f_format = "csv";
    auto* f_which_o = figure->add_option("--which", f_which, "1, 2 or 3")->required();
    auto* f_N_o = figure->add_option("--N", f_N, "matrix dimension");
    auto* f_nmax_o = figure->add_option("--n-max", f_nmax, "last iteration index");
    auto* f_C_o = figure->add_option("--C", f_C, "constant offset in the bounds");
    auto* f_digits_o = figure->add_option("--digits", f_digits, "extended precision digits");
    auto* f_beta_o = figure->add_option("--beta", f_beta, "restrict figure 3 to one beta");
    auto* f_out_o = figure->add_option("--out", f_out, "output path prefix");
    auto* f_format_o = figure->add_option("--format", f_format, "csv|json");

    // discretize
    auto* disc = app.add_subcommand("discretize", "emit partition, nodes and error grid");
    std::string d_family = "chebyshev", d_out = "discretize", d_format = "csv";
    double d_theta = 0.5;
    int d_k = 16, d_grid = 1000;
    auto* d_family_o = disc->add_option("--family", d_family, "chebyshev|power|equilibrium");
    auto* d_beta_o = disc->add_option("--beta", d_theta, "power-density exponent");
    auto* d_k_o = disc->add_option("--k", d_k, "certificate degree (>= 2)");
    auto* d_grid_o = disc->add_option("--grid", d_grid, "grid size");
    auto* d_out_o = disc->add_option("--out", d_out, "output path prefix");
    auto* d_format_o = disc->add_option("--format", d_format, "csv|json");

    // cg
    auto* cg = app.add_subcommand("cg", "run conjugate gradients on a sampled spectrum");
    std::string c_family = "example11", c_out = "cg", c_format = "csv";
    double c_beta = 0.5, c_b = 1.0;
    int c_N = 1000, c_nmax = 140, c_digits = 64;
    auto* c_family_o = cg->add_option("--family", c_family, "example11|example12");
    auto* c_beta_o = cg->add_option("--beta", c_beta, "example12 exponent");
    auto* c_b_o = cg->add_option("--b", c_b, "right spectral endpoint");
    auto* c_N_o = cg->add_option("--N", c_N, "matrix dimension");
    auto* c_nmax_o = cg->add_option("--n-max", c_nmax, "last iteration index");
    auto* c_digits_o = cg->add_option("--digits", c_digits, "extended precision digits");
    auto* c_out_o = cg->add_option("--out", c_out, "output path prefix");
    auto* c_format_o = cg->add_option("--format", c_format, "csv|json");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "emit convergence bound curves");
    std::string b_family = "example11", b_out = "bounds", b_format = "csv";
    double b_beta = 0.5, b_b = 1.0, b_C = 0.0;
    int b_N = 1000, b_nmax = 140;
    std::vector<int> b_d{};
    auto* b_family_o = bounds->add_option("--family", b_family, "example11|example12");
    auto* b_beta_o = bounds->add_option("--beta", b_beta, "example12 exponent");
    auto* b_b_o = bounds->add_option("--b", b_b, "right spectral endpoint");
    auto* b_N_o = bounds->add_option("--N", b_N, "matrix dimension");
    auto* b_nmax_o = bounds->add_option("--n-max", b_nmax, "last iteration index");
    auto* b_C_o = bounds->add_option("--C", b_C, "constant offset in the bounds");
    auto* b_d_o = bounds->add_option("--d", b_d, "outlier counts to tabulate");
    auto* b_out_o = bounds->add_option("--out", b_out, "output path prefix");
    auto* b_format_o = bounds->add_option("--format", b_format, "csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitValidation;
    }

    const json cfg = load_config(config_path);

    if (verify->parsed()) {
        merge_option(v_family_o, cfg, "family", v_family);
        merge_option(v_beta_o, cfg, "beta", v_thetas);
        merge_option(v_k_o, cfg, "k", v_k);
        merge_option(v_grid_o, cfg, "grid", v_grid);
        merge_option(v_out_o, cfg, "out", v_out);
        merge_option(v_format_o, cfg, "format", v_format);
        return cmd_verify_constants(v_family, v_thetas, v_k, v_grid, v_out, v_format);
    }
    if (figure->parsed()) {
        merge_option(f_which_o, cfg, "which", f_which);
        merge_option(f_N_o, cfg, "N", f_N);
        merge_option(f_nmax_o, cfg, "n-max", f_nmax);
        merge_option(f_C_o, cfg, "C", f_C);
        merge_option(f_digits_o, cfg, "digits", f_digits);
        merge_option(f_beta_o, cfg, "beta", f_beta);
        merge_option(f_out_o, cfg, "out", f_out);
        merge_option(f_format_o, cfg, "format", f_format);
        const bool beta_given = f_beta_o->count() > 0 || cfg.contains("beta");
        return cmd_figure(f_which, f_N, f_nmax, f_C, f_digits, f_beta, beta_given, f_out,
                          f_format);
    }
    if (disc->parsed()) {
        merge_option(d_family_o, cfg, "family", d_family);
        merge_option(d_beta_o, cfg, "beta", d_theta);
        merge_option(d_k_o, cfg, "k", d_k);
        merge_option(d_grid_o, cfg, "grid", d_grid);
        merge_option(d_out_o, cfg, "out", d_out);
        merge_option(d_format_o, cfg, "format", d_format);
        return cmd_discretize(d_family, d_theta, d_k, d_grid, d_out, d_format);
    }
    if (cg->parsed()) {
        merge_option(c_family_o, cfg, "family", c_family);
        merge_option(c_beta_o, cfg, "beta", c_beta);
        merge_option(c_b_o, cfg, "b", c_b);
        merge_option(c_N_o, cfg, "N", c_N);
        merge_option(c_nmax_o, cfg, "n-max", c_nmax);
        merge_option(c_digits_o, cfg, "digits", c_digits);
        merge_option(c_out_o, cfg, "out", c_out);
        merge_option(c_format_o, cfg, "format", c_format);
        return cmd_cg(c_family, c_beta, c_b, c_N, c_nmax, c_digits, c_out, c_format);
    }
    if (bounds->parsed()) {
        merge_option(b_family_o, cfg, "family", b_family);
        merge_option(b_beta_o, cfg, "beta", b_beta);
        merge_option(b_b_o, cfg, "b", b_b);
        merge_option(b_N_o, cfg, "N", b_N);
        merge_option(b_nmax_o, cfg, "n-max", b_nmax);
        merge_option(b_C_o, cfg, "C", b_C);
        merge_option(b_d_o, cfg, "d", b_d);
        merge_option(b_out_o, cfg, "out", b_out);
        merge_option(b_format_o, cfg, "format", b_format);
        return cmd_bounds(b_family, b_beta, b_b, b_N, b_nmax, b_C, b_d, b_out, b_format);
    }
    return kExitOk;
}

} // namespace
} // namespace cgpot::cli

int main(int argc, char** argv) {
    try {
        return cgpot::cli::dispatch(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
