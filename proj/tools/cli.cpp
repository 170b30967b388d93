#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "elliptic_bohr/elliptic_bohr.hpp"

namespace ebohr::cli {

namespace {

using nlohmann::json;

enum class Format { json, csv };

struct RunConfig {
    std::string command;
    double R = 0.0;
    double tol = 1e-12;
    std::uint64_t seed = 0;
    int n_max = 64;
    Format format = Format::json;
    std::string output_path;
};

json with_schema(json body) {
    json j{{"schema", "1"}};
    j.update(body);
    return j;
}

// Writes data either to --output or to the provided stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw RangeError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
    [[nodiscard]] bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

void add_format_option(CLI::App* sub, Format& fmt) {
    const std::map<std::string, Format> names{{"json", Format::json}, {"csv", Format::csv}};
    sub->add_option("--format", fmt, "Output format (json|csv)")->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

// ---- solve -----------------------------------------------------------------

int cmd_solve(const RunConfig& cfg, const std::string& kind_name, int fixed_order, std::ostream& out) {
    const auto kind = radius_kind_from_string(kind_name);
    if (!kind) throw CLI::ValidationError("--kind", "expected real or general");
    SolverOptions opts;
    if (fixed_order > 0) opts.truncation = Truncation::fixed(fixed_order);
    const RadiusSolution sol = solve_radius(*kind, cfg.tol, opts);
    Sink sink(cfg.output_path, out);
    if (cfg.format == Format::csv) {
        sink.stream() << "kind,value,bracket_lo,bracket_hi,truncation_order,tail_bound,residual\n"
                      << to_string(sol.kind) << ',' << format_double(sol.value) << ','
                      << format_double(sol.bracket_lo) << ',' << format_double(sol.bracket_hi) << ','
                      << sol.truncation_order << ',' << format_double(sol.tail_bound) << ','
                      << format_double(sol.residual) << '\n';
    } else {
        sink.stream() << with_schema(to_json(sol)).dump() << '\n';
    }
    return kSuccess;
}

// ---- verify ----------------------------------------------------------------

struct FamilySummary {
    InequalityFamily family{};
    int reports = 0;
    int failures = 0;
    bool all_hold = true;
    double min_slack = 0.0;
    std::uint64_t worst_seed = 0;

    void absorb(const InequalityReport& r, std::uint64_t seed) {
        if (r.entries.empty()) return;
        if (reports == 0 || r.min_slack < min_slack) {
            min_slack = r.min_slack;
            worst_seed = seed;
        }
        ++reports;
        if (!r.all_hold) {
            ++failures;
            all_hold = false;
        }
    }
};

InequalityReport run_family(InequalityFamily fam, const FaberSeries& s) {
    switch (fam) {
        case InequalityFamily::caratheodory_basic: return check_caratheodory_basic(s);
        case InequalityFamily::lemma33: return check_lemma33(s);
        case InequalityFamily::ineq7: return check_ineq7(s);
        case InequalityFamily::prop31: return check_prop31(s);
        case InequalityFamily::section4_main: return check_section4_main(s);
        case InequalityFamily::lemma44: return check_lemma44(s);
        case InequalityFamily::real_sharpening: return check_real_sharpening(s);
        default: throw std::logic_error("family is not a per-series check");
    }
}

std::vector<InequalityFamily> resolve_families(const std::vector<std::string>& names, double R, bool real) {
    std::vector<InequalityFamily> fams;
    if (names.empty()) {
        fams = {InequalityFamily::caratheodory_basic, InequalityFamily::lemma33, InequalityFamily::ineq7,
                InequalityFamily::section4_main};
        if (R <= kProp31MaxR) {
            fams.push_back(InequalityFamily::prop31);
            fams.push_back(InequalityFamily::lemma44);
        }
        if (real) fams.push_back(InequalityFamily::real_sharpening);
        return fams;
    }
    for (const auto& n : names) {
        const std::string name = n == "derivatives" ? "derivative_bounds" : n;
        const auto f = family_from_string(name);
        if (!f || *f == InequalityFamily::lemma52_53) {
            throw CLI::ValidationError("--families", "unknown inequality family: " + n);
        }
        if (std::find(fams.begin(), fams.end(), *f) == fams.end()) fams.push_back(*f);
    }
    for (auto f : fams) {
        if ((f == InequalityFamily::prop31 || f == InequalityFamily::lemma44) && R > kProp31MaxR) {
            throw HypothesisError(std::string(to_string(f)) + " requires R <= 0.2053, got R = " + format_double(R));
        }
        if (f == InequalityFamily::derivative_bounds && !(R > 0.0 && R <= 0.5)) {
            throw HypothesisError("derivative_bounds requires 0 < R <= 1/2, got R = " + format_double(R));
        }
    }
    return fams;
}

int cmd_verify(const RunConfig& cfg, int count, const std::vector<std::string>& family_names, bool real,
               std::ostream& out) {
    if (!(cfg.R >= 0.0 && cfg.R < 1.0)) throw RangeError("--R must satisfy 0 <= R < 1");
    if (count < 0) throw RangeError("--count must be >= 0");
    if (cfg.n_max < 0) throw RangeError("--n-max must be >= 0");
    const auto fams = resolve_families(family_names, cfg.R, real);

    std::vector<InequalityFamily> per_series;
    bool derivatives = false;
    for (auto f : fams) {
        if (f == InequalityFamily::derivative_bounds) {
            derivatives = true;
        } else {
            per_series.push_back(f);
        }
    }

    // One slot per seed so aggregation order does not depend on scheduling.
    std::vector<std::vector<InequalityReport>> results(static_cast<std::size_t>(count));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    GeneratorOptions gen;
    gen.real_coefficients = real;
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                const FaberSeries s = generate_positive_real_part(cfg.seed + static_cast<std::uint64_t>(i), cfg.R,
                                                                  cfg.n_max, gen);
                auto& slot = results[static_cast<std::size_t>(i)];
                for (auto f : per_series) slot.push_back(run_family(f, s));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned nthreads = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max(count, 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<FamilySummary> summary;
    for (auto f : per_series) summary.push_back({f});
    for (int i = 0; i < count; ++i) {
        const auto& slot = results[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < slot.size(); ++j) summary[j].absorb(slot[j], cfg.seed + static_cast<std::uint64_t>(i));
    }
    if (derivatives) {
        FamilySummary d{InequalityFamily::derivative_bounds};
        for (int n0 : {1, 3, 5}) d.absorb(check_lemma41_42_43(n0, 3, cfg.R, 1.0), static_cast<std::uint64_t>(n0));
        summary.push_back(d);
    }

    bool all = true;
    json fam_json = json::array();
    for (const auto& s : summary) {
        all = all && s.all_hold;
        json j{{"family", std::string(to_string(s.family))},
               {"reports", s.reports},
               {"failures", s.failures},
               {"all_hold", s.all_hold},
               {"min_slack", s.min_slack}};
        if (s.family != InequalityFamily::derivative_bounds) j["worst_seed"] = s.worst_seed;
        fam_json.push_back(std::move(j));
    }
    Sink sink(cfg.output_path, out);
    if (cfg.format == Format::csv) {
        sink.stream() << "family,reports,failures,all_hold,min_slack\n";
        for (const auto& s : summary) {
            sink.stream() << to_string(s.family) << ',' << s.reports << ',' << s.failures << ','
                          << (s.all_hold ? "true" : "false") << ',' << format_double(s.min_slack) << '\n';
        }
    } else {
        sink.stream() << with_schema({{"command", "verify"},
                                      {"R", cfg.R},
                                      {"seed", cfg.seed},
                                      {"count", count},
                                      {"n_max", cfg.n_max},
                                      {"real_coefficients", real},
                                      {"families", std::move(fam_json)},
                                      {"all_hold", all}})
                             .dump()
                      << '\n';
    }
    return all ? kSuccess : kVerificationFailure;
}

// ---- sweep -----------------------------------------------------------------

int cmd_sweep(const RunConfig& cfg, const std::string& kind_name, double lo, double hi, int steps,
              std::ostream& out) {
    const auto kind = radius_kind_from_string(kind_name);
    if (!kind) throw CLI::ValidationError("--kind", "expected real or general");
    if (!(lo >= 0.0 && lo < hi && hi < 1.0)) throw RangeError("sweep needs 0 <= R-lo < R-hi < 1");
    if (steps < 1) throw RangeError("--steps must be >= 1");
    Sink sink(cfg.output_path, out);
    json rows = json::array();
    if (cfg.format == Format::csv) sink.stream() << "R,series,tail_bound\n";
    for (int i = 0; i <= steps; ++i) {
        const double R = lo + (hi - lo) * i / steps;
        const SeriesEvaluation ev = defining_series(*kind, R, cfg.tol);
        if (cfg.format == Format::csv) {
            sink.stream() << format_double(R) << ',' << format_double(ev.value) << ',' << format_double(ev.tail_bound)
                          << '\n';
        } else {
            rows.push_back({{"R", R}, {"series", ev.value}, {"tail_bound", ev.tail_bound}});
        }
    }
    if (cfg.format == Format::json) {
        sink.stream() << with_schema({{"command", "sweep"}, {"kind", std::string(to_string(*kind))}, {"rows", rows}}).dump()
                      << '\n';
    }
    return kSuccess;
}

// ---- extremal --------------------------------------------------------------

int cmd_extremal(const RunConfig& cfg, const std::string& family_name, int k_min, int k_max, std::ostream& out) {
    const auto fam = extremal_family_from_string(family_name);
    if (!fam) throw CLI::ValidationError("--family", "expected phi1 or phi2");
    const ExtremalTrace trace = prop51_trace(*fam, cfg.R, k_min, k_max);
    const RadiusKind kind = *fam == ExtremalFamily::phi1 ? RadiusKind::real_coefficients : RadiusKind::general;
    json verdict{{"command", "extremal"},
                 {"family", std::string(to_string(*fam))},
                 {"R", cfg.R},
                 {"final_metric", trace.steps.back().metric},
                 {"final_bohr_sum_normalized", trace.steps.back().bohr_sum_normalized}};
    if (cfg.R > 0.0) {
        const OptimalityVerdict v = optimality_witness(kind, cfg.R, cfg.tol);
        verdict["witness"] = to_json(v);
        verdict["witnessed_failure"] = v.witnessed_failure;
    } else {
        verdict["witness"] = nullptr;
        verdict["witnessed_failure"] = false;
    }
    verdict = with_schema(std::move(verdict));

    Sink sink(cfg.output_path, out);
    if (cfg.format == Format::csv) {
        sink.stream() << to_csv(trace);
        if (sink.to_file()) {
            out << verdict.dump() << '\n';
        } else {
            out << "# " << verdict.dump() << '\n';
        }
    } else {
        verdict["trace"] = to_json(trace);
        sink.stream() << verdict.dump() << '\n';
    }
    return kSuccess;
}

// ---- geometry --------------------------------------------------------------

int cmd_geometry(const RunConfig& cfg, const std::vector<double>& Rs, std::ostream& out) {
    struct Row {
        std::string label;
        double R;
        double rho;
    };
    std::vector<Row> rows;
    const double R1 = solve_radius(RadiusKind::real_coefficients, std::max(cfg.tol, 1e-14)).value;
    const double R0 = solve_radius(RadiusKind::general, std::max(cfg.tol, 1e-14)).value;
    rows.push_back({"R1_real_coefficients", R1, rho_from_R(R1)});
    rows.push_back({"R0_general", R0, rho_from_R(R0)});
    for (double rho : {5.1284, 5.1573}) rows.push_back({"reference_rho", R_from_rho(rho), rho});
    for (double R : Rs) rows.push_back({"input", R, rho_from_R(R)});
    Sink sink(cfg.output_path, out);
    if (cfg.format == Format::csv) {
        sink.stream() << "label,R,rho,eccentricity\n";
        for (const auto& r : rows) {
            sink.stream() << r.label << ',' << format_double(r.R) << ',' << format_double(r.rho) << ','
                          << format_double(eccentricity(r.rho)) << '\n';
        }
    } else {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"label", r.label}, {"R", r.R}, {"rho", r.rho}, {"eccentricity", eccentricity(r.rho)}});
        }
        sink.stream() << with_schema({{"command", "geometry"}, {"rows", arr}}).dump() << '\n';
    }
    return kSuccess;
}

}  // namespace

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("ELLIPTIC_BOHR_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bohr radius of the elliptic condenser [-1,1]: solvers, inequality checks, extremal traces",
                 "elliptic-bohr"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string kind = "real";
    int fixed_order = 0;
    auto* solve = app.add_subcommand("solve", "Solve the defining equation for R1 (real) or R0 (general)");
    solve->add_option("--kind", kind, "real | general")->required();
    solve->add_option("--tol", cfg.tol, "Solver tolerance (>= 1e-14)");
    solve->add_option("--fixed-order", fixed_order, "Use fixed truncation order instead of adaptive");
    solve->add_option("--output", cfg.output_path, "Write data to this file");
    add_format_option(solve, cfg.format);

    int count = 100;
    std::vector<std::string> families;
    bool real = false;
    auto* verify = app.add_subcommand("verify", "Run the coefficient-inequality campaign on generated series");
    verify->add_option("--R", cfg.R, "Condenser parameter")->required();
    verify->add_option("--seed", cfg.seed, "First generator seed");
    verify->add_option("--count", count, "Number of generated series");
    verify->add_option("--n-max", cfg.n_max, "Truncation order of generated series");
    verify->add_option("--families", families, "Comma-separated families")->delimiter(',');
    verify->add_flag("--real", real, "Generate real-coefficient series and add the real sharpening");
    verify->add_option("--output", cfg.output_path, "Write data to this file");
    add_format_option(verify, cfg.format);

    double lo = 0.0;
    double hi = 0.5;
    int steps = 50;
    auto* sweep = app.add_subcommand("sweep", "Tabulate a defining series over an R range");
    sweep->add_option("--kind", kind, "real | general")->required();
    sweep->add_option("--R-lo", lo, "Lower end");
    sweep->add_option("--R-hi", hi, "Upper end");
    sweep->add_option("--steps", steps, "Number of intervals");
    sweep->add_option("--tol", cfg.tol, "Series tolerance");
    sweep->add_option("--output", cfg.output_path, "Write data to this file");
    add_format_option(sweep, cfg.format);

    std::string family = "phi1";
    int k_min = 4;
    int k_max = 16;
    auto* extremal = app.add_subcommand("extremal", "Trace an extremal family and report the optimality witness");
    extremal->add_option("--family", family, "phi1 | phi2")->required();
    extremal->add_option("--R", cfg.R, "Condenser parameter")->required();
    extremal->add_option("--k-min", k_min, "First k of r_k = 1 - 2^-k");
    extremal->add_option("--k-max", k_max, "Last k");
    extremal->add_option("--tol", cfg.tol, "Witness tolerance");
    extremal->add_option("--output", cfg.output_path, "Write the trace to this file");
    add_format_option(extremal, cfg.format);

    std::vector<double> geometry_R;
    auto* geometry = app.add_subcommand("geometry", "Print R, rho and eccentricity for the key radii");
    geometry->add_option("--R", geometry_R, "Extra R values to tabulate (space or comma separated)")->delimiter(',');
    geometry->add_option("--output", cfg.output_path, "Write data to this file");
    add_format_option(geometry, cfg.format);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    // csv is the default for the tabular commands
    for (CLI::App* sub : {sweep, extremal, geometry}) {
        if (*sub && sub->count("--format") == 0) cfg.format = Format::csv;
    }

    try {
        if (!(cfg.tol > 0.0)) throw RangeError("--tol must be > 0");
        if (*solve) return cmd_solve(cfg, kind, fixed_order, out);
        if (*verify) return cmd_verify(cfg, count, families, real, out);
        if (*sweep) return cmd_sweep(cfg, kind, lo, hi, steps, out);
        if (*extremal) return cmd_extremal(cfg, family, k_min, k_max, out);
        if (*geometry) return cmd_geometry(cfg, geometry_R, out);
    } catch (const HypothesisError& e) {
        err << "hypothesis error: " << e.what() << '\n';
        return kHypothesisError;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const RangeError& e) {
        err << "range error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsageError;
}

}  // namespace ebohr::cli
