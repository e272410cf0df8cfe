// bcsq: regenerate the datasets behind each figure as CSV or JSON.
//
// Exit status: 0 success, 1 validation error (bad flags, config, or parameters),
// 2 numerical failure. Nothing is left on disk when a run fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"

namespace fs = std::filesystem;
using namespace bcsq;
using namespace bcsq::cli;

namespace {

struct Options {
    std::string config;
    std::string out;
    std::string format = "csv";
    unsigned jobs = 0;
    long seed = 0;   // accepted for interface stability; nothing here is stochastic
};

std::string render(const Table& t, const std::string& format)
{
    return format == "json" ? to_json(t) : to_csv(t);
}

// Write through a sibling temporary so a failed run never leaves a truncated file behind.
void write_atomically(const fs::path& path, const std::string& text)
{
    fs::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw ValidationError("cannot open output file " + tmp.string());
        f << text;
        f.flush();
        if (!f) {
            f.close();
            fs::remove(tmp);
            throw NumericalError("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

json load_config(const Command& cmd, const std::string& path)
{
    const json defaults = cmd.defaults();
    if (path.empty())
        return defaults;
    return merge_strict(defaults, parse_toml_file(path));
}

int run_one(const Command& cmd, const Options& o)
{
    const json cfg = load_config(cmd, o.config);
    const std::string text = render(cmd.run(cfg, o.jobs), o.format);
    if (o.out.empty())
        std::cout << text;
    else
        write_atomically(o.out, text);
    return 0;
}

int run_all(const Options& o)
{
    if (o.out.empty())
        throw ValidationError("all-figures: --out <directory> is required");
    const fs::path dir(o.out);
    fs::create_directories(dir);
    const std::string ext = o.format == "json" ? ".json" : ".csv";
    // compute everything first, then write, so a failure leaves the directory untouched
    std::vector<std::pair<fs::path, std::string>> files;
    for (const auto& cmd : commands()) {
        const auto start = std::chrono::steady_clock::now();
        files.emplace_back(dir / (cmd.file_stem + ext), render(cmd.run(cmd.defaults(), o.jobs), o.format));
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::fprintf(stderr, "%-20s %7.2f s\n", cmd.name.c_str(), secs);
    }
    std::vector<fs::path> written;
    try {
        for (const auto& [path, text] : files) {
            write_atomically(path, text);
            written.push_back(path);
        }
    } catch (...) {
        for (const auto& p : written)
            fs::remove(p);
        throw;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"BCS-subspace circuit quantisation: figure datasets"};
    app.require_subcommand(1);
    Options o;
    std::string which;

    auto add_common = [&](CLI::App* sub, bool with_config) {
        if (with_config)
            sub->add_option("--config", o.config, "TOML config; omitted keys take built-in defaults")->check(CLI::ExistingFile);
        sub->add_option("--out", o.out, "output path (stdout when omitted; a directory for all-figures)");
        sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--jobs", o.jobs, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "ignored; no stochastic components");
    };
    for (const auto& cmd : commands()) {
        auto* sub = app.add_subcommand(cmd.name, cmd.help);
        add_common(sub, true);
        sub->callback([&which, name = cmd.name] { which = name; });
    }
    auto* all = app.add_subcommand("all-figures", "write every dataset at default parameters into --out");
    add_common(all, false);
    all->callback([&which] { which = "all-figures"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    if (o.jobs == 0)
        o.jobs = std::max(1u, std::thread::hardware_concurrency());

    try {
        return which == "all-figures" ? run_all(o) : run_one(find_command(which), o);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
