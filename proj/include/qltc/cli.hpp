#pragma once

// Command logic of the qltc tool. run() parses the arguments, executes one
// command and returns the process exit code, writing to the given streams,
// so the commands can be driven in-process.
//
// Exit codes: 0 success (boundcheck: every bound holds), 1 a bound is
// violated, 2 usage / parse / invalid input, 3 enumeration cap exceeded,
// 4 dependent classical checks, 5 undefined soundness.

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qltc/balance.hpp"
#include "qltc/code_spec.hpp"
#include "qltc/param_table.hpp"
#include "qltc/serialization.hpp"

namespace qltc::cli {

enum ExitCode : int {
    kOk = 0,
    kBoundViolated = 1,
    kUsage = 2,
    kCap = 3,
    kDependentChecks = 4,
    kUndefinedSoundness = 5,
};

struct RunConfig {
    std::uint64_t cap = kDefaultCap;
    std::uint64_t seed = 0;
    bool json = false;
};

inline const std::string& sweep_header() {
    static const std::string h =
        "seed,n,K,dX,dZ,locality,rhoX_num,rhoX_den,rhoZ_num,rhoZ_den,boundX_num,boundX_den,boundZ_num,boundZ_den,holdsX,holdsZ,ms";
    return h;
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
    std::string family;
    std::optional<std::size_t> l;
    std::string hhat;
    LdpcProfile ldpc;
    CssProfile css;
    std::string output;
};

inline CodeSpec gen_spec(const GenOptions& o, std::uint64_t seed) {
    CodeSpec spec;
    spec.family = parse_family(o.family);
    spec.seed = seed;
    switch (spec.family) {
        case Family::rep:
        case Family::rep_modified:
            if (!o.l) throw std::invalid_argument(o.family + " needs a length");
            spec.l = *o.l;
            break;
        case Family::q_complex:
            if (o.hhat.empty()) throw std::invalid_argument("q needs --hhat <pcm file>");
            spec.path = o.hhat;
            break;
        case Family::random_ldpc: spec.ldpc = o.ldpc; break;
        case Family::random_css: spec.css = o.css; break;
        case Family::hamming74: break;
        case Family::from_file: throw std::invalid_argument("gen cannot generate from_file; use analyze");
    }
    return spec;
}

inline std::string serialize(const AnyCode& code) {
    if (const auto* r = std::get_if<ClassicalCode>(&code)) return write_pcm(r->h());
    return complex_to_json(std::get<CssCode>(code).complex()).dump(2) + "\n";
}

inline CodeReport report_of(const AnyCode& code, std::uint64_t cap, const std::string& provenance) {
    if (const auto* r = std::get_if<ClassicalCode>(&code)) return analyze(*r, cap, provenance);
    return analyze(std::get<CssCode>(code), cap, provenance);
}

inline void print_report(const CodeReport& r, const RunConfig& cfg, std::ostream& out) {
    if (cfg.json)
        out << to_json(r).dump() << "\n";
    else
        out << to_text(r);
}

/// With -o: writes the code file and prints its report. Without: prints the
/// code file contents only.
inline int cmd_gen(const GenOptions& o, const RunConfig& cfg, std::ostream& out) {
    const CodeSpec spec = gen_spec(o, cfg.seed);
    const AnyCode code = build(spec);
    if (o.output.empty()) {
        out << serialize(code);
        return kOk;
    }
    write_text_file(o.output, serialize(code));
    const CodeReport report = report_of(code, cfg.cap, describe(spec));
    print_report(report, cfg, out);
    return report.complete() ? kOk : kCap;
}

// ---------------------------------------------------------------------------
// analyze

inline int cmd_analyze(const std::string& path, const RunConfig& cfg, std::ostream& out) {
    const CodeReport report = report_of(load_code(path), cfg.cap, "file " + path);
    print_report(report, cfg, out);
    return report.complete() ? kOk : kCap;
}

// ---------------------------------------------------------------------------
// balance

struct BalanceOptions {
    std::string quantum;
    std::string classical;
    std::string output;
    bool twice = false;
    bool reduce = false;
};

inline ClassicalCode prepare_classical(const std::string& path, bool reduce) {
    ClassicalCode r = load_classical(path);
    if (reduce && !r.independent_checks()) r = reduce_checks(r);
    return r;
}

/// Predicted parameters as JSON, with entries that depend on skipped input
/// measurements left null.
inline Json predicted_json(const CodeReport& q, const CodeReport& r, bool twice) {
    QuantumParams qp;
    qp.n = q.n;
    qp.k = q.k;
    qp.dx = q.dx.value_or(Distance::infinite());
    qp.dz = q.dz.value_or(Distance::infinite());
    qp.nx = q.nx;
    qp.nz = q.nz;
    if (q.rho_x && q.rho_x->defined()) qp.rho_x = q.rho_x->value;
    if (q.rho_z && q.rho_z->defined()) qp.rho_z = q.rho_z->value;
    qp.locality = q.locality;
    ClassicalParams rp{r.n, r.k, r.d.value_or(Distance::infinite()), r.s, r.locality};

    const PredictedParams p = twice ? predicted_double_params(qp, rp) : predicted_params(qp, rp);
    const bool dx_known = q.dx && r.d;
    const bool dz_known = q.dz && (!twice || r.d);
    Json j;
    j["n"] = p.n;
    j["K"] = p.k;
    j["dX"] = dx_known ? to_json(p.dx) : Json(nullptr);
    j["dZ"] = dz_known ? to_json(p.dz) : Json(nullptr);
    j["nX"] = p.nx;
    j["nZ"] = p.nz;
    j["soundness_bound_X"] = p.soundness_bound_x ? to_json(*p.soundness_bound_x) : Json(nullptr);
    j["soundness_bound_Z"] = p.soundness_bound_z ? to_json(*p.soundness_bound_z) : Json(nullptr);
    j["locality_bound"] = p.locality_bound;
    return j;
}

inline std::string json_cell(const Json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object() && v.contains("num")) return std::to_string(v["num"].get<std::int64_t>()) + "/" + std::to_string(v["den"].get<std::int64_t>());
    return v.dump();
}

inline int cmd_balance(const BalanceOptions& o, const RunConfig& cfg, std::ostream& out) {
    const CssCode q = load_css(o.quantum);
    const ClassicalCode r = prepare_classical(o.classical, o.reduce);
    const std::string parent = std::string(o.twice ? "double_balance" : "distance_balance") + "(" + o.quantum + ", " + o.classical + ")";
    const BalancedCode balanced = o.twice ? double_balance(q, r, parent) : distance_balance(q, r, parent);
    if (!o.output.empty()) write_text_file(o.output, balanced_to_json(balanced).dump(2) + "\n");

    const CodeReport q_report = analyze(q, cfg.cap, "file " + o.quantum);
    const CodeReport r_report = analyze(r, cfg.cap, "file " + o.classical);
    const CodeReport measured = analyze(balanced.code, cfg.cap, parent);
    const Json predicted = predicted_json(q_report, r_report, o.twice);
    const Json measured_json = to_json(measured);

    Json matches;
    for (const char* key : {"n", "K", "dX", "dZ", "nX", "nZ"}) {
        if (predicted[key].is_null() || measured_json[key].is_null())
            matches[key] = nullptr;
        else
            matches[key] = predicted[key] == measured_json[key];
    }
    const bool complete = q_report.complete() && r_report.complete() && measured.complete();

    if (cfg.json) {
        Json j;
        j["construction"] = o.twice ? "double_balance" : "distance_balance";
        j["predicted"] = predicted;
        j["measured"] = measured_json;
        j["matches"] = matches;
        out << j.dump() << "\n";
    } else {
        out << (o.twice ? "double balance" : "distance balance") << " of " << o.quantum << " with " << o.classical << "\n";
        out << "param      predicted  measured\n";
        for (const char* key : {"n", "K", "dX", "dZ", "nX", "nZ"}) {
            std::string p = json_cell(predicted[key]), m = json_cell(measured_json[key]);
            out << key << std::string(11 - std::string(key).size(), ' ') << p << std::string(p.size() < 11 ? 11 - p.size() : 1, ' ') << m
                << "\n";
        }
        out << "locality   <= " << predicted["locality_bound"].get<std::size_t>() << "      " << measured.locality << "\n";
        if (!o.twice) {
            out << "soundness bound X (d2^T code)  " << json_cell(predicted["soundness_bound_X"]) << "\n";
            out << "soundness bound Z (d1 code)    " << json_cell(predicted["soundness_bound_Z"]) << "\n";
        }
        if (!complete) out << "some fields were skipped: enumeration cap " << cfg.cap << "\n";
    }
    return complete ? kOk : kCap;
}

// ---------------------------------------------------------------------------
// boundcheck

struct BoundCheckOptions {
    std::string quantum;
    std::string classical;
    std::string assume_rho;
    bool reduce = false;
};

inline int cmd_boundcheck(const BoundCheckOptions& o, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const CssCode q = load_css(o.quantum);
    const ClassicalCode r = prepare_classical(o.classical, o.reduce);
    std::optional<Rational> assumed;
    if (!o.assume_rho.empty()) {
        assumed = parse_rational(o.assume_rho);
        if (*assumed < Rational(0)) throw std::invalid_argument("--assume-rho must be non-negative");
    }
    const BoundCheckResult result = bound_check(q, r, cfg.cap, assumed);
    for (const auto& w : result.warnings) err << "warning: " << w << "\n";
    if (cfg.json) {
        out << to_json(result).dump() << "\n";
    } else {
        for (const SideCheck* s : {&result.x, &result.z})
            out << "side " << s->side << ": measured " << to_string(s->measured) << "  bound " << to_string(s->bound) << "  "
                << (s->holds ? "holds" : "VIOLATED") << "\n";
        out << "rhoX " << to_string(result.rho_x) << ", rhoZ " << to_string(result.rho_z) << (result.assumed_rho ? " (assumed)" : " (measured)")
            << "\n";
    }
    return result.x.holds && result.z.holds ? kOk : kBoundViolated;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepJob {
    CodeSpec quantum;
    CodeSpec classical;
    std::uint64_t first_seed = 0;
    std::uint64_t last_seed = 0;
};

/// {"jobs":[{"quantum":spec,"classical":spec,"seeds":[first,last]}]}; an
/// empty (or whitespace-only) file is an empty job list.
inline std::vector<SweepJob> parse_jobs(const std::string& text) {
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("job file: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("jobs") || !j["jobs"].is_array()) throw ParseError("job file: expected {\"jobs\": [...]}");
    std::vector<SweepJob> jobs;
    for (const auto& job : j["jobs"]) {
        if (!job.is_object() || !job.contains("quantum") || !job.contains("classical"))
            throw ParseError("job file: each job needs \"quantum\" and \"classical\" specs");
        SweepJob out{spec_from_json(job["quantum"]), spec_from_json(job["classical"]), 0, 0};
        if (job.contains("seeds")) {
            const Json& s = job["seeds"];
            if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() || !s[1].is_number_unsigned())
                throw ParseError("job file: \"seeds\" must be [first, last] with non-negative integers");
            out.first_seed = s[0].get<std::uint64_t>();
            out.last_seed = s[1].get<std::uint64_t>();
            if (out.last_seed < out.first_seed) throw ParseError("job file: seed range is reversed");
        }
        jobs.push_back(std::move(out));
    }
    return jobs;
}

namespace detail {

inline std::string error_tag(const std::exception& e) {
    if (dynamic_cast<const CapExceeded*>(&e)) return "error:cap";
    if (dynamic_cast<const DependentChecks*>(&e)) return "error:dependent_checks";
    if (dynamic_cast<const UndefinedSoundness*>(&e)) return "error:undefined_soundness";
    return "error:invalid";
}

inline std::string csv_distance(const std::optional<Distance>& d) { return d ? d->to_string() : ""; }

}  // namespace detail

/// One CSV row: the balanced code's parameters and both soundness checks.
/// Failures are recorded in the holds columns and the row is still written.
inline std::string sweep_row(const SweepJob& job, std::uint64_t seed, std::uint64_t cap, bool timing) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> f(17);
    f[0] = std::to_string(seed);
    try {
        const AnyCode qa = build(with_seed(job.quantum, seed));
        const AnyCode ra = build(with_seed(job.classical, seed));
        if (!is_quantum(qa) || is_quantum(ra)) throw std::invalid_argument("sweep needs a quantum and a classical spec");
        const CssCode& q = std::get<CssCode>(qa);
        const ClassicalCode& r = std::get<ClassicalCode>(ra);
        const BalancedCode b = distance_balance(q, r);
        const CodeReport rep = analyze(b.code, cap);
        f[1] = std::to_string(rep.n);
        f[2] = std::to_string(rep.k);
        f[3] = detail::csv_distance(rep.dx);
        f[4] = detail::csv_distance(rep.dz);
        f[5] = std::to_string(rep.locality);

        auto side = [&](std::size_t col, auto&& check) {
            try {
                const SideCheck s = check();
                f[col] = std::to_string(s.measured.numerator());
                f[col + 1] = std::to_string(s.measured.denominator());
                f[col + 4] = std::to_string(s.bound.numerator());
                f[col + 5] = std::to_string(s.bound.denominator());
                f[col == 6 ? 14 : 15] = s.holds ? "true" : "false";
            } catch (const std::exception& e) {
                f[col == 6 ? 14 : 15] = detail::error_tag(e);
            }
        };
        side(6, [&] {
            const Soundness rho = classical_soundness(ClassicalCode::from_matrix(q.hz()), cap);
            if (!rho.defined()) throw UndefinedSoundness("X", rho.reason);
            return check_x_side(q, r, b, *rho.value, cap);
        });
        side(8, [&] {
            const Soundness rho = classical_soundness(ClassicalCode::from_matrix(q.hx()), cap);
            if (!rho.defined()) throw UndefinedSoundness("Z", rho.reason);
            return check_z_side(q, r, b, *rho.value, cap);
        });
    } catch (const std::exception& e) {
        f[14] = f[15] = detail::error_tag(e);
    }
    if (timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        f[16] = std::to_string(ms);
    }
    std::string line;
    for (std::size_t i = 0; i < f.size(); ++i) line += (i ? "," : "") + f[i];
    return line + "\n";
}

/// CSV for every (job, seed) in job order. The ms column is filled only with
/// `timing`, so that untimed output is byte-for-byte reproducible.
inline std::string run_sweep(const std::vector<SweepJob>& jobs, std::uint64_t cap, bool timing) {
    std::string csv = sweep_header() + "\n";
    for (const auto& job : jobs)
        for (std::uint64_t seed = job.first_seed;; ++seed) {
            csv += sweep_row(job, seed, cap, timing);
            if (seed == job.last_seed) break;
        }
    return csv;
}

struct SweepOptions {
    std::string jobs;
    std::string output;
    bool timing = false;
};

inline int cmd_sweep(const SweepOptions& o, const RunConfig& cfg, std::ostream& out) {
    const std::string csv = run_sweep(parse_jobs(read_text_file(o.jobs)), cfg.cap, o.timing);
    if (o.output.empty())
        out << csv;
    else
        write_text_file(o.output, csv);
    return kOk;
}

// ---------------------------------------------------------------------------
// table

struct TableOptions {
    std::string scenario;
    std::string alpha;
    TableInputs inputs;
};

inline int cmd_table(TableOptions o, const RunConfig& cfg, std::ostream& out) {
    if (!o.alpha.empty()) o.inputs.alpha = parse_rational(o.alpha);
    const ParamTable t = param_table(o.scenario, o.inputs);
    if (cfg.json)
        out << to_json(t).dump() << "\n";
    else
        out << render_markdown(t);
    return kOk;
}

// ---------------------------------------------------------------------------

/// Runs one command; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Distance balancing of CSS codes and exact verification of their parameters", "qltc"};
    app.fallthrough();
    app.require_subcommand(1, 1);

    RunConfig cfg;
    app.add_option("--cap", cfg.cap, "Enumeration cap (number of words a search may visit)")->check(CLI::Range(kMinimumCap, std::numeric_limits<std::uint64_t>::max()));
    app.add_option("--seed", cfg.seed, "Seed for random families");
    app.add_flag("--json", cfg.json, "Machine-readable JSON output");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a code file");
    gen_cmd->add_option("family", gen.family, "rep, rep-modified, hamming74, q, ldpc, css")->required();
    gen_cmd->add_option("l", gen.l, "Length for rep and rep-modified");
    gen_cmd->add_option("--hhat", gen.hhat, "PCM file with Hhat for q");
    gen_cmd->add_option("--t", gen.ldpc.t, "ldpc: bits");
    gen_cmd->add_option("--s", gen.ldpc.s, "ldpc: checks");
    gen_cmd->add_option("--row-weight", gen.ldpc.row_weight, "ldpc: maximum row weight");
    gen_cmd->add_option("--col-weight", gen.ldpc.col_weight, "ldpc: column weight");
    gen_cmd->add_flag("--exact-regular", gen.ldpc.exact_regular, "ldpc: every row has exactly the row weight");
    gen_cmd->add_option("--n", gen.css.n, "css: qubits");
    gen_cmd->add_option("--nx", gen.css.nx, "css: X checks");
    gen_cmd->add_option("--nz", gen.css.nz, "css: Z checks");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (PCM or complex JSON)");

    std::string analyze_path;
    auto* analyze_cmd = app.add_subcommand("analyze", "Exact parameters of a code file");
    analyze_cmd->add_option("path", analyze_path, "PCM or complex JSON file")->required();

    BalanceOptions bal;
    auto* balance_cmd = app.add_subcommand("balance", "Distance balance a CSS code with a classical code");
    balance_cmd->add_option("quantum", bal.quantum, "Complex JSON of the CSS code")->required();
    balance_cmd->add_option("classical", bal.classical, "PCM of the classical code")->required();
    balance_cmd->add_option("-o,--output", bal.output, "Write the balanced complex JSON here");
    balance_cmd->add_flag("--double", bal.twice, "Balance both distances");
    balance_cmd->add_flag("--reduce-checks", bal.reduce, "Drop dependent classical checks first");

    BoundCheckOptions bc;
    auto* bound_cmd = app.add_subcommand("boundcheck", "Compare measured soundness of a balanced code with its lower bounds");
    bound_cmd->add_option("quantum", bc.quantum, "Complex JSON of the CSS code")->required();
    bound_cmd->add_option("classical", bc.classical, "PCM of the classical code")->required();
    bound_cmd->add_option("--assume-rho", bc.assume_rho, "Use this input soundness (p/q) instead of measuring it");
    bound_cmd->add_flag("--reduce-checks", bc.reduce, "Drop dependent classical checks first");

    SweepOptions sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run bound checks over seeded instances, CSV out");
    sweep_cmd->add_option("jobs", sw.jobs, "Job file")->required();
    sweep_cmd->add_option("-o,--output", sw.output, "Write the CSV here");
    sweep_cmd->add_flag("--timing", sw.timing, "Fill the ms column");

    TableOptions tab;
    auto* table_cmd = app.add_subcommand("table", "Parameter tables");
    table_cmd->add_option("scenario", tab.scenario, "table1, table4, genParams, exampleParams")->required();
    table_cmd->add_option("--alpha", tab.alpha, "exampleParams: exponent in t = n^alpha (p/q)");
    table_cmd->add_option("--n", tab.inputs.n, "table4: columns of Hhat");
    table_cmd->add_option("--m", tab.inputs.m, "table4: rows of Hhat");
    table_cmd->add_option("--t", tab.inputs.t, "table4: classical length");
    table_cmd->add_option("--s", tab.inputs.s, "table4: classical checks");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, cfg, out);
        if (*analyze_cmd) return cmd_analyze(analyze_path, cfg, out);
        if (*balance_cmd) return cmd_balance(bal, cfg, out);
        if (*bound_cmd) return cmd_boundcheck(bc, cfg, out, err);
        if (*sweep_cmd) return cmd_sweep(sw, cfg, out);
        if (*table_cmd) return cmd_table(tab, cfg, out);
    } catch (const DependentChecks& e) {
        err << "error: " << e.what() << " (use --reduce-checks to drop dependent rows)\n";
        return kDependentChecks;
    } catch (const UndefinedSoundness& e) {
        err << "error: " << e.what() << "\n";
        return kUndefinedSoundness;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kCap;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace qltc::cli
