// redcyc: count, enumerate and verify the conjugacy classes of reducible
// cyclic subgroups of GL(2,q).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "redcyc/cli.hpp"

int main(int argc, char** argv) {
    using redcyc::cli::Format;
    using redcyc::cli::RunConfig;

    CLI::App app{"conjugacy classes of reducible cyclic subgroups of GL(2,q)"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "table";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--out", cfg.out_path, "write the report to this file");
        sub->add_flag("--quiet", cfg.quiet, "suppress stdout output");
        sub->add_option("--threads", cfg.threads, "worker threads for sweeps");
    };

    std::uint64_t m = 0, m_max = 0, q_max = 0;
    std::string field;

    CLI::App* count = app.add_subcommand("count", "evaluate the class-count formula for one m");
    count->add_option("--m", m, "subgroup order")->required();
    add_common(count);

    CLI::App* verify = app.add_subcommand(
        "verify", "check formula, diagonal model, Burnside and matrix census against each other");
    verify->add_option("--q", field, "field: prime power q or p^k")->required();
    verify->add_option("--m", m, "restrict to one subgroup order");
    add_common(verify);

    CLI::App* censusc = app.add_subcommand("census", "conjugacy classes found by brute force");
    censusc->add_option("--q", field, "field: prime power q or p^k")->required();
    censusc->add_option("--m", m, "subgroup order")->required();
    add_common(censusc);

    CLI::App* repsc = app.add_subcommand("reps", "canonical class representatives");
    repsc->add_option("--q", field, "field: prime power q or p^k")->required();
    repsc->add_option("--m", m, "subgroup order")->required();
    add_common(repsc);

    CLI::App* sweep = app.add_subcommand("sweep", "bulk verification over ranges of m and q");
    sweep->add_option("--m-max", m_max, "check every m up to this bound");
    sweep->add_option("--q-max", q_max, "verify every prime power q up to this bound");
    add_common(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (count->parsed()) cfg.command = "count";
    if (verify->parsed()) cfg.command = "verify";
    if (censusc->parsed()) cfg.command = "census";
    if (repsc->parsed()) cfg.command = "reps";
    if (sweep->parsed()) cfg.command = "sweep";

    for (CLI::App* sub : {count, verify, censusc, repsc})
        if (sub->parsed() && sub->count("--m")) cfg.m = m;
    if (!field.empty()) cfg.field = field;
    if (sweep->parsed()) {
        if (sweep->count("--m-max")) cfg.m_max = m_max;
        if (sweep->count("--q-max")) cfg.q_max = q_max;
    }
    if (format == "json")
        cfg.format = Format::json;
    else if (format == "csv")
        cfg.format = Format::csv;

    return redcyc::cli::run(cfg, std::cout, std::cerr);
}
