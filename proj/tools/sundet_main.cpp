#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "sundet/reporting.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"sundet: exact verification and decomposition sweeps for the\n"
                 "determinant congruence D_n(c,d) = det[(i^2+cij+dj^2)^(n-2)] = 0 (mod n^2)"};

    std::string mode = "verify";
    std::string n_text;
    std::string c_text = "0";
    std::string d_text = "0";
    std::string format = "json-lines";
    std::string out_path;
    unsigned jobs = 1;

    app.add_option("--mode", mode, "verify | explore | decompose | composite-audit")
        ->check(CLI::IsMember({"verify", "explore", "decompose", "composite-audit"}));
    app.add_option("--n", n_text, "n values, single 'a' or inclusive range 'a..b' (a >= 4)")
        ->required();
    app.add_option("--c", c_text, "c values, 'a' or 'a..b'");
    app.add_option("--d", d_text, "d values, 'a' or 'a..b'");
    app.add_option("--format", format, "json-lines | csv")
        ->check(CLI::IsMember({"json-lines", "csv"}));
    app.add_option("--out", out_path, "output file (default: standard output)");
    app.add_option("--jobs", jobs, "number of concurrent workers")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    sundet::SweepConfig config;
    try {
        config.n_range = sundet::parse_interval(n_text);
        config.c_range = sundet::parse_interval(c_text);
        config.d_range = sundet::parse_interval(d_text);
    } catch (const std::exception& e) {
        std::cerr << "sundet: " << e.what() << '\n';
        return 2;
    }
    static const std::map<std::string, sundet::SweepMode> modes = {
        {"verify", sundet::SweepMode::verify},
        {"explore", sundet::SweepMode::explore},
        {"decompose", sundet::SweepMode::decompose},
        {"composite-audit", sundet::SweepMode::composite_audit},
    };
    config.mode = modes.at(mode);
    config.format = format == "csv" ? sundet::OutputFormat::csv
                                    : sundet::OutputFormat::json_lines;
    config.output_path = out_path;
    config.jobs = jobs;

    return sundet::run_sweep(config);
}
