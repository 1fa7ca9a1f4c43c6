#include "levyfp/report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "levyfp/fpe.hpp"
#include "levyfp/generator.hpp"
#include "levyfp/quadrature.hpp"
#include "levyfp/version.hpp"

namespace levyfp {

namespace {

const std::vector<std::string> kExperiments = {
    "counterexample", "generator-compare", "adjoint-check", "fpe-residual",
    "dynkin-check",   "growth-fit",        "simulate"};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        throw ConfigError("invalid number '" + v + "' for key " + key, line);
    }
}

long parse_long(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t pos = 0;
        const long n = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return n;
    } catch (...) {
        throw ConfigError("invalid integer '" + v + "' for key " + key, line);
    }
}

bool parse_bool(const std::string& v, const std::string& key, int line) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("invalid boolean '" + v + "' for key " + key, line);
}

std::vector<double> parse_number_list(const std::string& v, const std::string& key, int line) {
    std::vector<double> out;
    std::istringstream in(v);
    std::string tok;
    while (in >> tok) out.push_back(parse_double(tok, key, line));
    if (out.empty()) throw ConfigError("empty list for key " + key, line);
    return out;
}

// "z:w, z:w, ..." atom list.
std::vector<LevyAtom> parse_atoms(const std::string& v, int line) {
    std::vector<LevyAtom> atoms;
    std::stringstream in(v);
    std::string pair;
    while (std::getline(in, pair, ',')) {
        pair = trim(pair);
        if (pair.empty()) continue;
        const auto colon = pair.find(':');
        if (colon == std::string::npos)
            throw ConfigError("atom '" + pair + "' must be z:w", line);
        atoms.push_back({parse_double(trim(pair.substr(0, colon)), "atoms", line),
                         parse_double(trim(pair.substr(colon + 1)), "atoms", line)});
    }
    return atoms;
}

// "constant c" | "linear slope intercept" | "quadratic c2 c1 c0"
Coefficient parse_coefficient(const std::string& v, const std::string& key, int line) {
    std::istringstream in(v);
    std::string fam;
    in >> fam;
    std::vector<double> args;
    std::string tok;
    while (in >> tok) args.push_back(parse_double(tok, key, line));
    if (fam == "constant" && args.size() == 1) return Coefficient::constant(args[0]);
    if (fam == "linear" && args.size() == 2) return Coefficient::linear(args[0], args[1]);
    if (fam == "quadratic" && args.size() == 3)
        return Coefficient::quadratic(args[0], args[1], args[2]);
    throw ConfigError("invalid coefficient spec '" + v + "' for key " + key +
                          " (expected: constant c | linear slope intercept | quadratic c2 c1 c0)",
                      line);
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string cell_to_string(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    if (std::holds_alternative<long>(c)) return std::to_string(std::get<long>(c));
    return std::get<std::string>(c);
}

} // namespace

// ---------------------------------------------------------------------------
// Config parsing
// ---------------------------------------------------------------------------

JumpDiffusionDensity ExperimentConfig::make_density() const {
    if (!density) throw ConfigError("experiment requires a [density] section");
    return JumpDiffusionDensity(density->x0, density->s, density->drift_rate, density->A,
                                density->lambda, density->jump_size, density->n_max);
}

ExperimentConfig ExperimentConfig::parse_string(const std::string& text) {
    ExperimentConfig cfg;

    // Collected per section, then materialized so multi-key types (triplet,
    // test function) see all their fields.
    double triplet_b = 0.0, triplet_A = 0.0;
    std::vector<LevyAtom> atoms;
    bool have_triplet = false;

    std::string tf_family;
    double tf_center = 0.0, tf_radius = 1.0, tf_a = 0.0, tf_b = 1.0, tf_omega = 1.0;
    std::vector<double> tf_coeffs;
    int tf_line = 0;

    std::optional<double> grid_lo, grid_hi;
    std::optional<int> grid_n;
    int grid_line = 0;

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("malformed section header", line_no);
            section = trim(line.substr(1, line.size() - 2));
            static const std::vector<std::string> known = {
                "triplet", "model", "test_function", "grid", "series", "sim", "density",
                "experiment"};
            if (std::find(known.begin(), known.end(), section) == known.end())
                throw ConfigError("unknown section [" + section + "]", line_no);
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("expected key = value", line_no);
        cfg.echo.emplace_back(section.empty() ? key : section + "." + key, value);

        try {
            if (section.empty() || section == "experiment") {
                if (key == "experiment") cfg.experiment = value;
                else if (key == "x") cfg.x = parse_double(value, key, line_no);
                else if (key == "s") cfg.s = parse_double(value, key, line_no);
                else if (key == "t") cfg.t = parse_double(value, key, line_no);
                else if (key == "delta_t") cfg.delta_t = parse_double(value, key, line_no);
                else if (key == "z") cfg.z = parse_double(value, key, line_no);
                else if (key == "K") cfg.K = static_cast<int>(parse_long(value, key, line_no));
                else if (key == "growth_K")
                    cfg.growth_K = static_cast<int>(parse_long(value, key, line_no));
                else throw ConfigError("unknown key '" + key + "'", line_no);
            } else if (section == "triplet") {
                have_triplet = true;
                if (key == "b") triplet_b = parse_double(value, key, line_no);
                else if (key == "A") triplet_A = parse_double(value, key, line_no);
                else if (key == "atoms") atoms = parse_atoms(value, line_no);
                else throw ConfigError("unknown key 'triplet." + key + "'", line_no);
            } else if (section == "model") {
                if (key == "drift") cfg.drift = parse_coefficient(value, key, line_no);
                else if (key == "noise") cfg.noise = parse_coefficient(value, key, line_no);
                else throw ConfigError("unknown key 'model." + key + "'", line_no);
            } else if (section == "test_function") {
                tf_line = line_no;
                if (key == "family") tf_family = value;
                else if (key == "center") tf_center = parse_double(value, key, line_no);
                else if (key == "radius") tf_radius = parse_double(value, key, line_no);
                else if (key == "a") tf_a = parse_double(value, key, line_no);
                else if (key == "b") tf_b = parse_double(value, key, line_no);
                else if (key == "omega") tf_omega = parse_double(value, key, line_no);
                else if (key == "coeffs") tf_coeffs = parse_number_list(value, key, line_no);
                else throw ConfigError("unknown key 'test_function." + key + "'", line_no);
            } else if (section == "grid") {
                grid_line = line_no;
                if (key == "lo") grid_lo = parse_double(value, key, line_no);
                else if (key == "hi") grid_hi = parse_double(value, key, line_no);
                else if (key == "n") grid_n = static_cast<int>(parse_long(value, key, line_no));
                else throw ConfigError("unknown key 'grid." + key + "'", line_no);
            } else if (section == "series") {
                if (key == "k_max")
                    cfg.series_k_max = static_cast<int>(parse_long(value, key, line_no));
                else if (key == "tol") cfg.series_tol = parse_double(value, key, line_no);
                else if (key == "require_converged")
                    cfg.require_converged = parse_bool(value, key, line_no);
                else throw ConfigError("unknown key 'series." + key + "'", line_no);
            } else if (section == "sim") {
                if (key == "dt") cfg.sim.dt = parse_double(value, key, line_no);
                else if (key == "t_end") cfg.sim.t_end = parse_double(value, key, line_no);
                else if (key == "n_paths") cfg.sim.n_paths = parse_long(value, key, line_no);
                else if (key == "seed") {
                    try {
                        std::size_t pos = 0;
                        cfg.sim.seed = std::stoull(value, &pos);
                        if (pos != value.size()) throw std::invalid_argument("");
                    } catch (...) {
                        throw ConfigError("invalid seed '" + value + "'", line_no);
                    }
                }
                else if (key == "antithetic")
                    cfg.sim.antithetic = parse_bool(value, key, line_no);
                else throw ConfigError("unknown key 'sim." + key + "'", line_no);
            } else if (section == "density") {
                if (!cfg.density) cfg.density.emplace();
                if (key == "x0") cfg.density->x0 = parse_double(value, key, line_no);
                else if (key == "s") cfg.density->s = parse_double(value, key, line_no);
                else if (key == "drift_rate")
                    cfg.density->drift_rate = parse_double(value, key, line_no);
                else if (key == "A") cfg.density->A = parse_double(value, key, line_no);
                else if (key == "lambda") cfg.density->lambda = parse_double(value, key, line_no);
                else if (key == "jump_size")
                    cfg.density->jump_size = parse_double(value, key, line_no);
                else if (key == "n_max") {
                    if (value != "auto")
                        cfg.density->n_max = static_cast<int>(parse_long(value, key, line_no));
                } else throw ConfigError("unknown key 'density." + key + "'", line_no);
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError(std::string(e.what()), line_no);
        }
    }

    if (cfg.echo.empty()) throw ConfigError("empty config");

    try {
        if (have_triplet) cfg.triplet.emplace(triplet_b, triplet_A, atoms);
        if (!tf_family.empty()) {
            if (tf_family == "bump") cfg.phi = TestFunction::bump(tf_center, tf_radius);
            else if (tf_family == "gaussian") cfg.phi = TestFunction::gaussian(tf_a, tf_b);
            else if (tf_family == "cosine") cfg.phi = TestFunction::cosine(tf_omega);
            else if (tf_family == "poly_gaussian")
                cfg.phi = TestFunction::poly_gaussian(tf_coeffs, tf_a, tf_b);
            else
                throw ConfigError("unknown test_function family '" + tf_family + "'", tf_line);
        }
        if (grid_lo || grid_hi || grid_n) {
            if (!(grid_lo && grid_hi && grid_n))
                throw ConfigError("[grid] needs lo, hi and n", grid_line);
            cfg.grid.emplace(*grid_lo, *grid_hi, *grid_n);
        }
        if (cfg.series_k_max < 1 || cfg.series_k_max > 170)
            throw ConfigError("series.k_max must be in [1, 170]");
        if (!(cfg.series_tol >= 0.0)) throw ConfigError("series.tol must be >= 0");
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string(e.what()));
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

// ---------------------------------------------------------------------------
// Experiments
// ---------------------------------------------------------------------------

namespace {

const LevyTriplet& require_triplet(const ExperimentConfig& c) {
    if (!c.triplet) throw ConfigError("experiment requires a [triplet] section");
    return *c.triplet;
}
const TestFunction& require_phi(const ExperimentConfig& c) {
    if (!c.phi) throw ConfigError("experiment requires a [test_function] section");
    return *c.phi;
}
const Grid& require_grid(const ExperimentConfig& c) {
    if (!c.grid) throw ConfigError("experiment requires a [grid] section");
    return *c.grid;
}
SDEModel require_model(const ExperimentConfig& c) {
    if (!c.drift || !c.noise)
        throw ConfigError("experiment requires [model] drift and noise");
    return SDEModel{*c.drift, *c.noise};
}

void series_rows(ReportRecord& rec, const std::string& op,
                 const std::vector<OperatorComparison>& rows, bool require_converged) {
    rec.columns = {"x", "exact", "series", "gap", "verdict"};
    for (const auto& r : rows) {
        rec.row_ops.push_back(op);
        rec.rows.push_back({r.x, r.exact, r.series.value(), r.gap,
                            std::string(to_string(r.series.verdict))});
        if (require_converged && r.series.verdict != SeriesVerdict::converged) {
            rec.failed = true;
            rec.failure_reason = "series did not converge at x = " + format_double(r.x);
        }
    }
}

void run_counterexample(const ExperimentConfig& cfg, ReportRecord& rec) {
    const Grid grid = cfg.grid ? *cfg.grid : Grid(-3.0, 3.0, 61);
    series_rows(rec, "counterexample_report",
                counterexample_report(grid, cfg.series_k_max, cfg.series_tol),
                cfg.require_converged);
}

void run_generator_compare(const ExperimentConfig& cfg, ReportRecord& rec) {
    const SDEModel model = require_model(cfg);
    const LevyTriplet& triplet = require_triplet(cfg);
    const TestFunction& phi = require_phi(cfg);
    const Grid& grid = require_grid(cfg);
    std::vector<OperatorComparison> rows;
    for (int i = 0; i < grid.size(); ++i) {
        OperatorComparison row;
        row.x = grid.point(i);
        row.exact = exact_generator(phi, model, triplet, row.x, cfg.t);
        row.series =
            series_generator(phi, model, triplet, row.x, cfg.t, cfg.series_k_max, cfg.series_tol);
        row.gap = std::abs(row.exact - row.series.value());
        rows.push_back(std::move(row));
    }
    series_rows(rec, "exact_generator/series_generator", rows, cfg.require_converged);
}

void run_adjoint_check(const ExperimentConfig& cfg, ReportRecord& rec) {
    const JumpDiffusionDensity p = cfg.make_density();
    if (!cfg.noise) throw ConfigError("adjoint-check requires [model] noise");
    if (!cfg.noise->polynomial_in_x())
        throw ConfigError("adjoint-check requires polynomial noise");
    const Polynomial sigma = cfg.noise->poly_at(cfg.t);
    const TestFunction& phi = require_phi(cfg);
    const Grid& grid = require_grid(cfg);
    rec.columns = {"k", "lhs", "rhs", "gap"};
    for (int k = 1; k <= cfg.K; ++k) {
        const AdjointCheck chk = adjoint_term_check(k, cfg.z, sigma, p, phi, grid, cfg.t);
        rec.row_ops.push_back("adjoint_term_check");
        rec.rows.push_back({static_cast<long>(k), chk.lhs, chk.rhs, chk.gap});
    }
}

void run_fpe_residual(const ExperimentConfig& cfg, ReportRecord& rec) {
    const JumpDiffusionDensity p = cfg.make_density();
    const SDEModel model = require_model(cfg);
    const LevyTriplet& triplet = require_triplet(cfg);
    const Grid& grid = require_grid(cfg);
    const FpeResidual res =
        fpe_residual(p, model, triplet, grid, cfg.t, cfg.K, cfg.series_tol);
    rec.columns = {"y", "dpdt", "rhs", "residual"};
    for (int i = 0; i < grid.size(); ++i) {
        rec.row_ops.push_back("fpe_residual");
        rec.rows.push_back({grid.point(i), res.dpdt[i], res.rhs[i], res.per_point[i]});
    }
    rec.verdicts.emplace_back("max_residual", format_double(res.max_abs));
    rec.verdicts.emplace_back("conservation",
                              format_double(simpson(grid, res.rhs)));
    rec.verdicts.emplace_back("tail_mass", format_double(p.tail_mass(cfg.t)));
}

void run_dynkin_check(const ExperimentConfig& cfg, ReportRecord& rec, int n_threads) {
    const SDEModel model = require_model(cfg);
    const LevyTriplet& triplet = require_triplet(cfg);
    const TestFunction& phi = require_phi(cfg);
    const MCEstimate est =
        dynkin_rate(phi, model, triplet, cfg.x, cfg.s, cfg.delta_t, cfg.sim, n_threads);
    const double exact = exact_generator(phi, model, triplet, cfg.x, cfg.s);
    rec.columns = {"rate", "std_error", "exact", "delta_t"};
    rec.row_ops.push_back("dynkin_rate");
    rec.rows.push_back({est.mean, est.std_error, exact, cfg.delta_t});
    rec.verdicts.emplace_back(
        "sigmas_from_exact",
        format_double(est.std_error > 0.0 ? std::abs(est.mean - exact) / est.std_error : 0.0));
}

void run_growth_fit(const ExperimentConfig& cfg, ReportRecord& rec) {
    const Grid& grid = require_grid(cfg);
    GrowthFit fit;
    if (cfg.phi) {
        fit = derivative_growth_fit(*cfg.phi, grid, cfg.growth_K);
    } else if (cfg.density) {
        fit = derivative_growth_fit(cfg.make_density(), cfg.t, grid, cfg.growth_K);
    } else {
        throw ConfigError("growth-fit requires [test_function] or [density]");
    }
    rec.columns = {"k", "sup_norm", "c_estimate"};
    for (std::size_t i = 0; i < fit.sup_norms.size(); ++i) {
        rec.row_ops.push_back("derivative_growth_fit");
        rec.rows.push_back(
            {static_cast<long>(i + 1), fit.sup_norms[i], fit.c_estimates[i]});
    }
    rec.verdicts.emplace_back("bounded", fit.bounded_verdict ? "true" : "false");
    rec.verdicts.emplace_back("c_final", format_double(fit.c_final));
}

void run_simulate(const ExperimentConfig& cfg, ReportRecord& rec, int n_threads) {
    const SDEModel model = require_model(cfg);
    const LevyTriplet& triplet = require_triplet(cfg);
    const TestFunction& phi = require_phi(cfg);
    const MCEstimate est = mc_expectation(phi, model, triplet, cfg.x, cfg.s, cfg.sim, n_threads);
    rec.columns = {"mean", "std_error", "n_paths"};
    rec.row_ops.push_back("mc_expectation");
    rec.rows.push_back({est.mean, est.std_error, static_cast<long>(est.n_paths)});
}

} // namespace

ReportRecord run(const ExperimentConfig& config, int n_threads) {
    if (std::find(kExperiments.begin(), kExperiments.end(), config.experiment) ==
        kExperiments.end())
        throw ConfigError("unknown experiment '" + config.experiment + "'");

    ReportRecord rec;
    rec.experiment = config.experiment;
    rec.version = LEVYFP_VERSION;
    rec.seed = config.sim.seed;
    rec.input_echo = config.echo;

    const auto t0 = std::chrono::steady_clock::now();
    if (config.experiment == "counterexample") run_counterexample(config, rec);
    else if (config.experiment == "generator-compare") run_generator_compare(config, rec);
    else if (config.experiment == "adjoint-check") run_adjoint_check(config, rec);
    else if (config.experiment == "fpe-residual") run_fpe_residual(config, rec);
    else if (config.experiment == "dynkin-check") run_dynkin_check(config, rec, n_threads);
    else if (config.experiment == "growth-fit") run_growth_fit(config, rec);
    else if (config.experiment == "simulate") run_simulate(config, rec, n_threads);
    const auto t1 = std::chrono::steady_clock::now();
    rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

std::string emit(const ReportRecord& report, ReportFormat format) {
    if (format == ReportFormat::csv) {
        std::string out;
        for (std::size_t c = 0; c < report.columns.size(); ++c) {
            if (c) out += ',';
            out += report.columns[c];
        }
        out += '\n';
        for (const auto& row : report.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += ',';
                out += cell_to_string(row[c]);
            }
            out += '\n';
        }
        return out;
    }

    nlohmann::ordered_json doc;
    doc["experiment"] = report.experiment;
    doc["version"] = report.version;
    doc["seed"] = report.seed;
    nlohmann::ordered_json input = nlohmann::ordered_json::array();
    for (const auto& [k, v] : report.input_echo) input.push_back({{"key", k}, {"value", v}});
    doc["input"] = std::move(input);
    doc["columns"] = report.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < report.rows.size(); ++r) {
        nlohmann::ordered_json row;
        row["op"] = report.row_ops[r];
        nlohmann::ordered_json vals = nlohmann::ordered_json::array();
        for (const auto& cell : report.rows[r]) {
            if (std::holds_alternative<double>(cell)) vals.push_back(std::get<double>(cell));
            else if (std::holds_alternative<long>(cell)) vals.push_back(std::get<long>(cell));
            else vals.push_back(std::get<std::string>(cell));
        }
        row["values"] = std::move(vals);
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.verdicts) verdicts[k] = v;
    doc["verdicts"] = std::move(verdicts);
    if (report.failed) doc["failure"] = report.failure_reason;
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// CLI
// ---------------------------------------------------------------------------

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"levyfp: numerical laboratory for forward equations of "
                 "jump-diffusion SDEs driven by finite-activity Levy noise"};
    app.require_subcommand(0, 1);

    std::string config_path;
    std::string format = "json";
    std::string out_path;
    std::optional<std::uint64_t> seed_override;
    int n_threads = 1;

    std::string chosen;
    for (const auto& name : kExperiments) {
        CLI::App* sub = app.add_subcommand(name, "run the " + name + " experiment");
        sub->add_option("--config", config_path, "config file (key = value with [sections])")
            ->required();
        sub->add_option("--format", format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "output path (default: stdout)");
        sub->add_option("--seed", seed_override, "override [sim] seed");
        sub->add_option("--threads", n_threads, "worker threads for Monte Carlo")
            ->check(CLI::PositiveNumber);
        sub->callback([&chosen, name] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (chosen.empty()) {
        std::cerr << app.help() << std::endl;
        return 2;
    }

    try {
        ExperimentConfig cfg = ExperimentConfig::parse_file(config_path);
        if (cfg.experiment.empty()) cfg.experiment = chosen;
        if (cfg.experiment != chosen)
            throw ConfigError("config declares experiment '" + cfg.experiment +
                              "' but subcommand is '" + chosen + "'");
        if (seed_override) cfg.sim.seed = *seed_override;

        const ReportRecord rec = run(cfg, n_threads);
        const std::string payload =
            emit(rec, format == "csv" ? ReportFormat::csv : ReportFormat::json);
        if (out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write to '" + out_path + "'");
            out << payload;
        }
        // Timing goes to stderr so the report bytes stay deterministic.
        std::cerr << "# wall_ms=" << rec.wall_ms << "\n";
        if (rec.failed) {
            std::cerr << "experiment failure: " << rec.failure_reason << "\n";
            return 1;
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "experiment error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace levyfp
