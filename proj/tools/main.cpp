#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jobs.hpp"
#include "sprod/errors.hpp"
#include "sprod/parallel.hpp"

using sprod::cli::json;

namespace {

void emit(const json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    f << text;
}

json error_report(const char* name, const std::string& message) {
    return {{"schema", "1"}, {"status", "error"}, {"error", {{"name", name}, {"message", message}}}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact scalar products and partition functions for XXX spin chains"};
    std::string job_path, suite, out_path;
    std::uint64_t seed = 7;
    int threads = 1;
    auto* job_opt = app.add_option("--job", job_path, "JSON job file, '-' for stdin");
    auto* suite_opt = app.add_option("--suite", suite, "verification suite name");
    app.add_option("--seed", seed, "seed for random instances");
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
    app.add_option("--out", out_path, "write the report here instead of stdout");
    job_opt->excludes(suite_opt);
    CLI11_PARSE(app, argc, argv);

    if (job_path.empty() && suite.empty()) {
        std::cerr << "one of --job or --suite is required\n" << app.help();
        return 2;
    }
    sprod::set_threads(threads);

    try {
        json report;
        if (!suite.empty()) {
            report = sprod::cli::suite_report(suite, seed);
        } else {
            json job;
            try {
                if (job_path == "-") {
                    job = json::parse(std::cin);
                } else {
                    std::ifstream f(job_path);
                    if (!f) throw sprod::Error(sprod::ErrorKind::SchemaError, "cannot open " + job_path);
                    job = json::parse(f);
                }
            } catch (const json::parse_error& e) {
                throw sprod::Error(sprod::ErrorKind::SchemaError, e.what());
            }
            if (job.is_object() && !job.contains("seed")) job["seed"] = seed;
            report = sprod::cli::run_job(job);
        }
        emit(report, out_path);
        return report.at("status") == "pass" ? 0 : 1;
    } catch (const sprod::Error& e) {
        emit(error_report(sprod::error_name(e.kind()), e.what()), out_path);
        return 2;
    }
}
