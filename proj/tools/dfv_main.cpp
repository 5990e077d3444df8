#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "dfv/suites.hpp"

namespace {

constexpr int kDefaultMaxN = 5;

int writeOut(const std::string& text, const std::string& outFile) {
    if (outFile.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(outFile, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << outFile << "\n";
        return 2;
    }
    os << text;
    return 0;
}

void checkGuardrail(int n, int maxN) {
    if (n < 1 || n > maxN)
        throw CLI::ValidationError("--n", "n must lie in [1, " + std::to_string(maxN) +
                                             "] (raise with --max-n)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbit classification and Steinberg maps for the GL(2n) polarized double flag variety"};
    app.require_subcommand(1);

    int n = 1;
    int maxN = kDefaultMaxN;
    std::uint64_t seed = 0;
    int trials = dfv::kDefaultTrials;
    int bound = dfv::kDefaultBound;
    std::string format = "json";
    std::string outFile;
    bool ciOnly = false;
    std::string suite = "all";

    auto addCommon = [&](CLI::App* cmd, bool withSeed) {
        cmd->add_option("--n", n, "rank n")->required();
        cmd->add_option("--max-n", maxN, "enumeration guardrail (default 5)");
        cmd->add_option("--out", outFile, "write output to FILE instead of stdout");
        if (withSeed) {
            cmd->add_option("--seed", seed, "random seed (default 0)");
            cmd->add_option("--trials", trials, "generic samples per fiber (default 5)");
            cmd->add_option("--bound", bound, "coefficient bound for sampling (default 100)");
        }
    };

    CLI::App* count = app.add_subcommand("count", "class counts for rank n");
    addCommon(count, false);
    count->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    CLI::App* orbits = app.add_subcommand("orbits", "export one record per class");
    addCommon(orbits, true);
    orbits->add_flag("--ci", ciOnly, "keep only sigma-stable classes");
    orbits->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    addCommon(check, true);
    check->add_option("--suite", suite, "rs, counts, conjecture or all")
        ->check(CLI::IsMember({"rs", "counts", "conjecture", "all"}));
    check->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) {
            checkGuardrail(n, maxN);
            auto reps = dfv::enumerate_orbit_reps(n);
            auto syds = dfv::enumerate_syd(n);
            int ciSyd = 0;
            for (const auto& d : syds)
                if (dfv::is_ci_diagram(d)) ++ciSyd;
            std::size_t ciClasses = dfv::enumerate_ci_orbits(n).size();
            if (format == "text") {
                std::ostringstream os;
                os << "n " << n << "\n"
                   << "aiii_classes " << reps.size() << "\n"
                   << "ci_classes " << ciClasses << "\n"
                   << "syd " << syds.size() << "\n"
                   << "syd_ci " << ciSyd << "\n";
                return writeOut(os.str(), outFile);
            }
            dfv::ordered_json j;
            j["n"] = n;
            j["aiii_classes"] = reps.size();
            j["aiii_formula"] = dfv::count_orbits(n);
            j["ci_classes"] = ciClasses;
            j["syd"] = syds.size();
            j["syd_ci"] = ciSyd;
            return writeOut(j.dump(2) + "\n", outFile);
        }

        if (orbits->parsed()) {
            checkGuardrail(n, maxN);
            auto records = dfv::orbit_records(n, ciOnly, seed, trials, bound);
            std::string text =
                format == "csv" ? dfv::records_to_csv(records) : dfv::records_to_json(records);
            return writeOut(text, outFile);
        }

        if (check->parsed()) {
            checkGuardrail(n, maxN);
            std::vector<dfv::SuiteResult> results;
            if (suite == "rs" || suite == "all") results.push_back(dfv::run_suite_rs(n, seed, trials, bound));
            if (suite == "counts" || suite == "all") results.push_back(dfv::run_suite_counts(n));
            if (suite == "conjecture" || suite == "all")
                results.push_back(dfv::run_suite_conjecture(n, seed, trials, bound));

            bool allPassed = true;
            dfv::ordered_json report = dfv::ordered_json::array();
            std::ostringstream text;
            for (const auto& r : results) {
                allPassed = allPassed && r.passed;
                dfv::ordered_json j;
                j["suite"] = r.name;
                j["passed"] = r.passed;
                j["details"] = r.details;
                report.push_back(std::move(j));
                text << (r.passed ? "PASS" : "FAIL") << " " << r.name << "\n";
            }
            int rc = writeOut(format == "text" ? text.str() : report.dump(2) + "\n", outFile);
            if (rc != 0) return rc;
            return allPassed ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
