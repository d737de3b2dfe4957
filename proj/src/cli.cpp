// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include "simqos/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "simqos/sim.hpp"
#include "simqos/stdmap.hpp"

namespace simqos::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunOptions {
    std::string scenario_path;
    std::string seed_spec;
    std::string out_dir;
    bool force = false;
    bool trace = false;
};

std::vector<uint64_t> parse_seeds(const std::string& spec) {
    std::vector<uint64_t> seeds;
    const auto parse_one = [](const std::string& s) -> uint64_t {
        size_t pos = 0;
        const uint64_t v = std::stoull(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("bad seed \"" + s + "\"");
        return v;
    };
    if (const auto dots = spec.find(".."); dots != std::string::npos) {
        const uint64_t lo = parse_one(spec.substr(0, dots));
        const uint64_t hi = parse_one(spec.substr(dots + 2));
        if (hi < lo || hi - lo > 10'000)
            throw std::invalid_argument("bad seed range \"" + spec + "\"");
        for (uint64_t s = lo; s <= hi; ++s)
            seeds.push_back(s);
        return seeds;
    }
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ','))
        seeds.push_back(parse_one(item));
    if (seeds.empty())
        throw std::invalid_argument("no seeds in \"" + spec + "\"");
    return seeds;
}

std::string default_out_dir() {
    if (const char* env = std::getenv("SIMQOS_OUT"); env && *env)
        return env;
    return "out";
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot write " + path.string());
    os << content;
}

// One seed's outputs into one directory.
void run_one(const ScenarioConfig& cfg, uint64_t seed, const fs::path& dir, bool trace) {
    StringTraceSink sink;
    const Report report = run_scenario(cfg, seed, trace ? &sink : nullptr);

    write_file(dir / "flows.csv", flows_csv(report));
    write_file(dir / "classes.csv", classes_csv(report));

    json meta;
    meta["seed"] = report.seed;
    meta["duration_s"] = static_cast<double>(report.duration) * 1e-9;
    meta["warmup_frac"] = report.warmup_frac;
    meta["scenario"] = json::parse(report.scenario_echo);
    meta["connections"] = {{"attempts", report.connections.attempts},
                           {"admitted", report.connections.admitted},
                           {"queued", report.connections.queued},
                           {"rejected", report.connections.rejected},
                           {"timed_out", report.connections.timed_out},
                           {"blocking_ratio", report.connections.blocking_ratio}};
    json actions = json::array();
    for (const auto& a : report.actions)
        actions.push_back({{"time_ns", a.at.ns},
                           {"level", a.level},
                           {"kind", a.kind},
                           {"target", a.target},
                           {"effect", a.effect}});
    meta["actions"] = actions;
    write_file(dir / "meta.json", meta.dump(2) + "\n");

    if (trace) {
        write_file(dir / "node_trace.csv", sink.node_lines.str());
        write_file(dir / "marks.csv", sink.mark_lines.str());
    }
}

int do_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    std::ifstream is(opt.scenario_path);
    if (!is) {
        err << "error: cannot read " << opt.scenario_path << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << is.rdbuf();

    const ParseResult parsed = parse_scenario(buffer.str());
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors)
            err << e.str() << "\n";
        return 1;
    }

    std::vector<uint64_t> seeds;
    try {
        seeds = parse_seeds(opt.seed_spec);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    const fs::path base = opt.out_dir;
    try {
        std::vector<fs::path> dirs;
        for (uint64_t seed : seeds)
            dirs.push_back(seeds.size() == 1 ? base : base / ("seed-" + std::to_string(seed)));
        for (const auto& dir : dirs) {
            if (fs::exists(dir) && !fs::is_empty(dir) && !opt.force) {
                err << "error: " << dir.string() << " is not empty (use --force)\n";
                return 2;
            }
            fs::create_directories(dir);
        }

        // Independent runs share no mutable state; fan seeds out.
        std::vector<std::future<void>> jobs;
        for (size_t i = 0; i < seeds.size(); ++i) {
            const ScenarioConfig& cfg = *parsed.config;
            const uint64_t seed = seeds[i];
            const fs::path dir = dirs[i];
            jobs.push_back(std::async(std::launch::async,
                                      [&cfg, seed, dir, &opt] { run_one(cfg, seed, dir, opt.trace); }));
        }
        for (auto& job : jobs)
            job.get();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    for (size_t i = 0; i < seeds.size(); ++i)
        out << "seed " << seeds[i] << " -> "
            << (seeds.size() == 1 ? base : base / ("seed-" + std::to_string(seeds[i]))).string()
            << "\n";
    return 0;
}

} // namespace

std::string qci_map_csv() {
    std::ostringstream os;
    os << "qci,traffic_class,thp,phb,edca_ac,up,primary,label_ambiguous\n";
    for (const QciRow& row : qci_table()) {
        os << row.qci << ',' << to_string(row.traffic_class) << ','
           << (row.thp ? std::to_string(*row.thp) : std::string("N/A")) << ','
           << to_string(row.phb) << ',' << to_string(row.edca_ac) << ',' << row.up.value << ','
           << (row.primary_class ? 1 : 0) << ',' << (row.label_ambiguous ? 1 : 0) << '\n';
    }
    return os.str();
}

namespace {

std::string qci_map_table() {
    std::ostringstream os;
    os << "QCI  Traffic class   THP  PHB   EDCA AC  UP  Primary\n";
    for (const QciRow& row : qci_table()) {
        char line[96];
        std::snprintf(line, sizeof(line), "%-4d %-15s %-4s %-5s %-8s %-3d %s\n", row.qci,
                      to_string(row.traffic_class),
                      row.thp ? std::to_string(*row.thp).c_str() : "-", to_string(row.phb),
                      to_string(row.edca_ac), row.up.value, row.primary_class ? "yes" : "");
        os << line;
    }
    return os.str();
}

} // namespace

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"simqos - incentive-based QoS network simulator"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run_cmd = app.add_subcommand("run", "simulate a scenario and write CSV reports");
    run_cmd->add_option("scenario", run_opt.scenario_path, "scenario JSON document")->required();
    run_cmd->add_option("--seed", run_opt.seed_spec,
                        "seed, comma list, or range a..b (runs fan out per seed)")
        ->required();
    run_cmd->add_option("--out", run_opt.out_dir, "output directory (default ./out or $SIMQOS_OUT)");
    run_cmd->add_flag("--force", run_opt.force, "overwrite non-empty output directories");
    run_cmd->add_flag("--trace", run_opt.trace, "write per-node event and marking traces");

    std::string validate_path;
    CLI::App* validate_cmd = app.add_subcommand("validate", "parse and validate a scenario only");
    validate_cmd->add_option("scenario", validate_path, "scenario JSON document")->required();

    std::string map_format = "csv";
    CLI::App* map_cmd = app.add_subcommand("map", "print the 3GPP/IETF/IEEE QoS mapping");
    map_cmd->add_option("--format", map_format, "csv or table")
        ->check(CLI::IsMember({"csv", "table"}));

    std::vector<const char*> argv;
    argv.push_back("simqos");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        const int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code == 0 ? 0 : 1;
    }

    if (run_cmd->parsed()) {
        if (run_opt.out_dir.empty())
            run_opt.out_dir = default_out_dir();
        return do_run(run_opt, out, err);
    }
    if (validate_cmd->parsed()) {
        std::ifstream is(validate_path);
        if (!is) {
            err << "error: cannot read " << validate_path << "\n";
            return 1;
        }
        std::stringstream buffer;
        buffer << is.rdbuf();
        const ParseResult parsed = parse_scenario(buffer.str());
        if (!parsed.ok()) {
            for (const auto& e : parsed.errors)
                err << e.str() << "\n";
            return 1;
        }
        out << "ok\n";
        return 0;
    }
    if (map_cmd->parsed()) {
        out << (map_format == "csv" ? qci_map_csv() : qci_map_table());
        return 0;
    }
    return 1;
}

} // namespace simqos::cli
