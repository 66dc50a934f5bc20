#include "arp/cli.hpp"

#include "arp/enumeration.hpp"
#include "arp/experiments.hpp"
#include "arp/instance_io.hpp"
#include "arp/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>

namespace arp::cli {

using nlohmann::json;

namespace {

struct GlobalFlags {
    unsigned workers = 1;
    std::optional<double> timeout_secs;
    std::size_t cap = 10;
    bool json = false;
};

std::optional<Clock::time_point> deadline_from(const GlobalFlags &g) {
    if (!g.timeout_secs) return std::nullopt;
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*g.timeout_secs));
}

json rational_json(const Rational &r) { return {{"exact", r.str()}, {"approx", r.decimal_str()}}; }

json perms_json(const std::vector<Permutation> &perms) {
    json arr = json::array();
    for (const auto &p : perms) arr.push_back(p.order());
    return arr;
}

std::string approx(const Rational &r) { return r.str() + " (~" + r.decimal_str() + ")"; }

int cmd_solve(const std::string &file, bool prune, const GlobalFlags &g, std::ostream &out) {
    const Instance inst = load_instance(file);
    SearchOptions options;
    options.workers = g.workers;
    options.deadline = deadline_from(g);
    options.prune = prune;
    const SolveReport r = solve(inst, options);
    if (g.json) {
        out << json{{"command", "solve"},
                    {"n", inst.size()},
                    {"optimum", rational_json(r.optimum)},
                    {"optimal_perms", perms_json(r.optimal_perms)},
                    {"qn", r.q_n},
                    {"qn_exact", r.q_n_exact},
                    {"nodes", r.nodes_expanded},
                    {"ties", r.ties_detected},
                    {"elapsed_micros", r.elapsed.count()}}
                   .dump(2)
            << '\n';
        return kOk;
    }
    out << "optimum " << approx(r.optimum) << '\n';
    for (const auto &p : r.optimal_perms) out << "perm " << p.str() << '\n';
    out << "Qn " << r.q_n << (r.q_n_exact ? "" : " (lower bound, pruned)") << '\n';
    out << "nodes " << r.nodes_expanded << '\n';
    out << "ties " << (r.ties_detected ? "true" : "false") << '\n';
    out << "elapsed_micros " << r.elapsed.count() << '\n';
    return kOk;
}

int cmd_brute(const std::string &file, bool full_eval, const GlobalFlags &g, std::ostream &out) {
    const Instance inst = load_instance(file);
    OracleOptions options;
    options.cap = g.cap;
    options.workers = g.workers;
    options.deadline = deadline_from(g);
    options.incremental = !full_eval;
    const OracleReport r = brute_force_solve(inst, options);
    if (g.json) {
        out << json{{"command", "brute"},
                    {"n", inst.size()},
                    {"optimum", rational_json(r.optimum)},
                    {"argmax_perms", perms_json(r.argmax_perms)},
                    {"permutations_evaluated", r.permutations_evaluated},
                    {"stable_count", r.stable_count}}
                   .dump(2)
            << '\n';
        return kOk;
    }
    out << "optimum " << approx(r.optimum) << '\n';
    for (const auto &p : r.argmax_perms) out << "perm " << p.str() << '\n';
    out << "evaluated " << r.permutations_evaluated << '\n';
    out << "stable " << r.stable_count << '\n';
    return kOk;
}

int cmd_count(const std::string &file, const GlobalFlags &g, std::ostream &out) {
    const Instance inst = load_instance(file);
    SearchOptions options;
    options.workers = g.workers;
    options.deadline = deadline_from(g);
    const CountReport r = count_stable(inst, options);
    if (g.json) {
        out << json{{"command", "count"},
                    {"n", inst.size()},
                    {"qn", r.q_n},
                    {"nodes", r.nodes_expanded},
                    {"ties", r.ties_detected}}
                   .dump(2)
            << '\n';
        return kOk;
    }
    out << "Qn " << r.q_n << '\n';
    return kOk;
}

int cmd_check(const std::string &file, const std::string &perm_text, const std::string &threshold_text,
              const GlobalFlags &g, std::ostream &out, std::ostream &err) {
    const Instance inst = load_instance(file);
    Rational threshold;
    try {
        threshold = Rational::parse(threshold_text);
    } catch (const std::exception &e) {
        err << "error: --threshold: " << e.what() << '\n';
        return kUsage;
    }
    std::optional<Permutation> perm;
    try {
        perm = Permutation::parse(perm_text);
    } catch (const Error &) {
        // An unreadable certificate is simply not a valid one.
    }
    const bool accepted = perm && verify_certificate(inst, *perm, threshold);
    std::optional<Rational> value;
    if (perm && perm->is_valid_for(inst.size())) value = evaluate(inst, *perm).total;

    if (g.json) {
        json doc = {{"command", "check"}, {"accepted", accepted}, {"threshold", rational_json(threshold)}};
        doc["value"] = value ? rational_json(*value) : json(nullptr);
        out << doc.dump(2) << '\n';
    } else {
        out << (accepted ? "accept" : "reject");
        if (value) {
            out << ' ' << value->str() << (accepted ? " >= " : " < ") << threshold.str();
        } else {
            out << " (not a permutation of 1.." << inst.size() << ")";
        }
        out << '\n';
    }
    return accepted ? kOk : kReject;
}

int cmd_reduce(const std::string &file, const std::string &output, const GlobalFlags &g, std::ostream &out) {
    const Instance arp = reduce_nvep_to_arp(load_instance(file));
    save_instance(arp, output);
    if (g.json) {
        out << json{{"command", "reduce"}, {"n", arp.size()}, {"output", output}}.dump(2) << '\n';
    } else {
        out << "wrote ARP instance with " << arp.size() << " airplanes to " << output << '\n';
    }
    return kOk;
}

struct GenFlags {
    std::string family = "canonical";
    std::size_t n = 0;
    std::string M = "10";
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> range{100, 10};
};

GeneratorSpec spec_from(const GenFlags &f) {
    GeneratorSpec spec;
    spec.family = parse_family(f.family);
    spec.n = f.n;
    spec.seed = f.seed;
    try {
        spec.M = Rational::parse(f.M);
    } catch (const std::exception &e) {
        throw Error(ErrorCode::InvalidParam, std::string("--M: ") + e.what());
    }
    if (f.range.size() != 2) throw Error(ErrorCode::InvalidParam, "--range takes two values");
    spec.value_range = {f.range[0], f.range[1]};
    validate(spec);
    return spec;
}

int cmd_gen(const GenFlags &f, const std::string &output, const GlobalFlags &g, std::ostream &out) {
    const Instance inst = generate(spec_from(f));
    save_instance(inst, output);
    if (g.json) {
        out << json{{"command", "gen"}, {"n", inst.size()}, {"label", inst.label()}, {"output", output}}.dump(2)
            << '\n';
    } else {
        out << "wrote " << inst.label() << " to " << output << '\n';
    }
    return kOk;
}

json summary_json(const RegimeSummary &s) {
    json entries = json::array();
    for (const auto &e : s.entries) {
        json entry = {{"n", e.n},
                      {"rows", e.rows},
                      {"max_qn", e.max_q_n},
                      {"bound_2exp", e.bound_2exp},
                      {"bound_margin", e.bound_margin},
                      {"log2_qn", e.log2_q_n}};
        entry["growth_ratio"] = e.growth_ratio ? json(e.growth_ratio->str()) : json(nullptr);
        entry["log2_slope"] = e.log2_slope ? json(*e.log2_slope) : json(nullptr);
        entries.push_back(entry);
    }
    json doc = {{"entries", entries},
                {"bound_violations", s.bound_violations},
                {"tied_rows", s.tied_rows},
                {"timed_out_rows", s.timed_out_rows}};
    doc["inflection_candidate"] = s.inflection_candidate ? json(*s.inflection_candidate) : json(nullptr);
    return doc;
}

void print_summary(const RegimeSummary &s, std::ostream &out) {
    out << "n\tmax_qn\tbound\tmargin\tratio\tlog2_slope\n";
    for (const auto &e : s.entries) {
        out << e.n << '\t' << e.max_q_n << '\t' << e.bound_2exp << '\t' << e.bound_margin << '\t'
            << (e.growth_ratio ? e.growth_ratio->str() : "-") << '\t';
        if (e.log2_slope) {
            out << *e.log2_slope;
        } else {
            out << '-';
        }
        out << '\n';
    }
    out << "inflection_candidate (observational) "
        << (s.inflection_candidate ? std::to_string(*s.inflection_candidate) : "none") << '\n';
    out << "bound_violations " << s.bound_violations.size() << '\n';
    out << "tied_rows " << s.tied_rows.size() << '\n';
    out << "timed_out_rows " << s.timed_out_rows.size() << '\n';
}

int cmd_bench(const GenFlags &f, std::size_t n_from, std::size_t n_to, std::size_t reps, const std::string &output,
              const GlobalFlags &g, std::ostream &out) {
    GenFlags template_flags = f;
    template_flags.n = n_from;
    const GeneratorSpec spec = spec_from(template_flags);
    SweepOptions options;
    options.workers = g.workers;
    if (g.timeout_secs) options.row_timeout = std::chrono::seconds(static_cast<long long>(*g.timeout_secs));
    const auto rows = qn_sweep(spec, n_from, n_to, reps, options);

    std::ofstream csv(output, std::ios::binary);
    if (!csv) throw Error(ErrorCode::ParseError, output + ": cannot open for writing");
    write_sweep_csv(csv, rows);

    std::optional<RegimeSummary> summary;
    try {
        summary = regime_report(rows);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::InsufficientData) throw;
    }
    if (g.json) {
        json doc = {{"command", "bench"}, {"rows", rows.size()}, {"output", output}};
        doc["summary"] = summary ? summary_json(*summary) : json(nullptr);
        out << doc.dump(2) << '\n';
    } else {
        out << "wrote " << rows.size() << " rows to " << output << '\n';
        if (summary) {
            print_summary(*summary, out);
        } else {
            out << "too few sizes for growth statistics\n";
        }
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact solver and Q_n laboratory for the airplane refueling problem", "arp"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--timeout-secs", g.timeout_secs, "Time budget (per row for bench)")->check(CLI::PositiveNumber);
    app.add_option("--cap", g.cap, "Largest n accepted by the brute-force oracle");
    app.add_flag("--json", g.json, "Machine-readable output");

    std::string file;
    std::string output;

    bool prune = false;
    auto *solve_cmd = app.add_subcommand("solve", "Optimum by sequential search over swap-stable orders");
    solve_cmd->add_option("file", file, "Instance file")->required();
    solve_cmd->add_flag("--prune", prune, "Upper-bound pruning (Qn becomes a lower bound)");

    bool full_eval = false;
    auto *brute_cmd = app.add_subcommand("brute", "Brute-force oracle over all n! orders");
    brute_cmd->add_option("file", file, "Instance file")->required();
    brute_cmd->add_flag("--full-eval", full_eval, "Re-evaluate every order instead of updating incrementally");

    auto *count_cmd = app.add_subcommand("count", "Number of swap-stable orders (Qn)");
    count_cmd->add_option("file", file, "Instance file")->required();

    std::string perm_text;
    std::string threshold_text;
    auto *check_cmd = app.add_subcommand("check", "Verify a certificate: exit 0 accept, 1 reject");
    check_cmd->add_option("file", file, "Instance file")->required();
    check_cmd->add_option("--perm", perm_text, "Drop-out order, e.g. 2,1,3")->required();
    check_cmd->add_option("--threshold", threshold_text, "Required flight length, p/q or decimal")->required();

    auto *reduce_cmd = app.add_subcommand("reduce", "Map an NVEP instance to ARP");
    reduce_cmd->add_option("file", file, "NVEP instance file")->required();
    reduce_cmd->add_option("-o,--output", output, "ARP instance file")->required();

    GenFlags gen;
    auto *gen_cmd = app.add_subcommand("gen", "Generate an instance");
    gen_cmd->add_option("--family", gen.family, "canonical | random")->required();
    gen_cmd->add_option("--n", gen.n, "Number of airplanes")->required();
    gen_cmd->add_option("--M", gen.M, "Cap on v_n/c_n (canonical family)");
    gen_cmd->add_option("--seed", gen.seed, "RNG seed (random family)");
    gen_cmd->add_option("--range", gen.range, "Numerator and denominator bounds (random family)")->expected(2);
    gen_cmd->add_option("-o,--output", output, "Instance file")->required();

    std::size_t n_from = 2;
    std::size_t n_to = 10;
    std::size_t reps = 1;
    GenFlags bench;
    auto *bench_cmd = app.add_subcommand("bench", "Qn sweep over n, written as CSV");
    bench_cmd->add_option("--family", bench.family, "canonical | random")->required();
    bench_cmd->add_option("--n-from", n_from)->required();
    bench_cmd->add_option("--n-to", n_to)->required();
    bench_cmd->add_option("--reps", reps);
    bench_cmd->add_option("--M", bench.M);
    bench_cmd->add_option("--seed", bench.seed);
    bench_cmd->add_option("--range", bench.range)->expected(2);
    bench_cmd->add_option("-o,--output", output, "CSV file")->required();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("arp");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*solve_cmd) return cmd_solve(file, prune, g, out);
        if (*brute_cmd) return cmd_brute(file, full_eval, g, out);
        if (*count_cmd) return cmd_count(file, g, out);
        if (*check_cmd) return cmd_check(file, perm_text, threshold_text, g, out, err);
        if (*reduce_cmd) return cmd_reduce(file, output, g, out);
        if (*gen_cmd) return cmd_gen(gen, output, g, out);
        if (*bench_cmd) return cmd_bench(bench, n_from, n_to, reps, output, g, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::Timeout ? kTimeout : kInputError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    err << app.help();
    return kUsage;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace arp::cli
