// mathon: build and machine-check the 21-line perp-system of PG(5,3) and
// the geometries derived from it.
//
// exit codes: 0 every check passed, 1 a verification failed, 2 usage error

#include "mathon/serde.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct Options {
    int seed_index = 0;
    std::string out;
    std::string format = "text";
    long long budget = 100000;
    uint64_t search_seed = 1;
    int jobs = 1;
    bool quiet = false;
    bool timings = false;
};

int emit(const Options& opt, const mathon::Json& j, const std::string& text, bool all_pass) {
    std::string payload = opt.format == "json" ? j.dump(2) + "\n" : text;
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f) {
            std::cerr << "cannot open output file: " << opt.out << "\n";
            return 2;
        }
        f << payload;
    } else if (!opt.quiet) {
        std::cout << payload;
    }
    if (!all_pass) std::cerr << "verification failed\n";
    return all_pass ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& opt, bool with_seed = true) {
    if (with_seed)
        cmd->add_option("--seed-index", opt.seed_index, "which of the 24 lines of L to grow from")
            ->check(CLI::Range(0, 23));
    cmd->add_option("--out", opt.out, "write the report to a file instead of stdout");
    cmd->add_option("--format", opt.format, "report format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--jobs", opt.jobs, "worker threads for the heavy scans")->check(CLI::Range(1, 256));
    cmd->add_flag("--quiet", opt.quiet, "suppress the report on stdout");
    cmd->add_flag("--timings", opt.timings, "include wall-clock timings in the report");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"machine verification of the 21-line perp-system of PG(5,3)"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* pipeline = app.add_subcommand("pipeline", "run the whole construction and every check");
    add_common(pipeline, opt);

    CLI::App* verify = app.add_subcommand(
        "verify", "re-check one stage, keyed by its line count: 1 (seed Gram family), "
                  "4 (the 24-line set), 5 (five-line stabilizer), 6 (six fixed lines), "
                  "15 (fifteen induced lines)");
    int stage_id = 0;
    verify->add_option("stage", stage_id, "stage id: 1, 4, 5, 6 or 15")->required();
    add_common(verify, opt);

    CLI::App* polarity =
        app.add_subcommand("polarity-search", "find hyperbolic and elliptic polarity witnesses");
    polarity->add_option("--budget", opt.budget, "random candidates after the invariant-space passes")
        ->check(CLI::NonNegativeNumber);
    polarity->add_option("--search-seed", opt.search_seed, "seed for the random fallback");
    add_common(polarity, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (pipeline->parsed()) {
            mathon::PipelineReport rep = mathon::run_pipeline(opt.seed_index, opt.jobs);
            return emit(opt, mathon::report_to_json(rep, opt.timings),
                        mathon::report_to_text(rep, opt.timings), rep.all_pass);
        }
        if (verify->parsed()) {
            if (!mathon::is_valid_stage_id(stage_id)) {
                std::cerr << "unknown stage id " << stage_id << " (expected 1, 4, 5, 6 or 15)\n";
                return 2;
            }
            mathon::StageReport rep = mathon::run_stage(stage_id, opt.seed_index, opt.jobs);
            return emit(opt, mathon::report_to_json(rep, opt.timings),
                        mathon::report_to_text(rep, opt.timings), rep.all_pass);
        }
        mathon::PolarityReport rep =
            mathon::run_polarity_search(opt.search_seed, opt.budget, opt.seed_index, opt.jobs);
        return emit(opt, mathon::report_to_json(rep, opt.timings),
                    mathon::report_to_text(rep, opt.timings), rep.all_pass);
    } catch (const mathon::WitnessNotFound& e) {
        std::cerr << "witness search failed: " << e.what() << "\n";
        return 1;
    } catch (const mathon::Error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
}
