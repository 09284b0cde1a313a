// murlab: command-line front end for minimum universal rank analysis.

#include "murlab/murlab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using murlab::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_graph6(const std::string& text) {
    std::istringstream in(text);
    std::string line, token;
    int tokens = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) {
            if (t[0] == '#') break;
            token = t;
            ++tokens;
        }
    }
    if (tokens != 1) return false;
    return !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); });
}

/// A graph6 token, or a file holding either one graph6 token or an edge list.
Graph load_graph(const std::string& input, const std::string& format) {
    const bool is_file = std::filesystem::is_regular_file(input);
    const std::string text = is_file ? read_file(input) : input;
    if (format == "graph6") return murlab::parse_graph6(text);
    if (format == "edges") return murlab::parse_edge_list(text);
    if (!is_file || looks_like_graph6(text)) return murlab::parse_graph6(text);
    return murlab::parse_edge_list(text);
}

struct Common {
    murlab::SearchOptions search;
    bool no_family = false;

    void add_to(CLI::App* app) {
        app->add_option("--budget", search.node_budget, "Node budget for induced path forest search")
            ->capture_default_str();
        app->add_option("--grid-den", search.grid_den, "Largest grid denominator")
            ->capture_default_str()
            ->check(CLI::Range(1, 64));
        app->add_option("--grid-num", search.grid_num, "Largest absolute grid numerator")
            ->capture_default_str()
            ->check(CLI::Range(0, 64));
        app->add_option("--random-points", search.random_points, "Extra seeded random parameter points")
            ->capture_default_str()
            ->check(CLI::NonNegativeNumber);
        app->add_option("--seed", search.seed, "Seed for the random parameter points")->capture_default_str();
        app->add_flag("--no-family", no_family, "Skip family recognizers and use the generic pipeline");
    }

    [[nodiscard]] murlab::SearchOptions options() const {
        auto o = search;
        o.use_families = !no_family;
        return o;
    }
};

murlab::Report analyze(const Graph& g, bool complement, const murlab::SearchOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    murlab::Report rep;
    rep.graph = g;
    rep.complement = complement;
    rep.options = opts;
    rep.result = murlab::compute_mur(rep.analyzed(), opts);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

json spread_to_json(const murlab::SpreadResult& s) {
    return {{"vertex", s.vertex},
            {"degree", s.degree},
            {"lower", s.lo},
            {"upper", s.hi},
            {"status", s.exact ? "exact" : "interval"},
            {"value", s.value ? json(*s.value) : json(nullptr)},
            {"bound_lower", s.bound_lo},
            {"bound_upper", s.bound_hi},
            {"consistent", s.consistent},
            {"deleted", {{"lower", s.deleted.lower}, {"upper", s.deleted.upper}, {"summary", murlab::summary(s.deleted)}}}};
}

std::string spread_summary(const murlab::SpreadResult& s) {
    std::string out = "spread at vertex " + std::to_string(s.vertex) + " (degree " + std::to_string(s.degree) + "): ";
    out += s.exact ? std::to_string(*s.value) + " (exact)"
                   : "[" + std::to_string(s.lo) + "," + std::to_string(s.hi) + "]";
    out += ", allowed [" + std::to_string(s.bound_lo) + "," + std::to_string(s.bound_hi) + "]";
    if (!s.consistent) out += " INCONSISTENT";
    return out;
}

// ------------------------------------------------------------------ mur

int cmd_mur(const std::string& input, const std::string& format, const Common& common, bool complement, bool as_json,
            int spread_vertex, bool instantiate) {
    const Graph g = load_graph(input, format);
    auto opts = common.options();
    opts.instantiate_spectral = instantiate;
    const auto rep = analyze(g, complement, opts);

    std::optional<murlab::SpreadResult> spread;
    if (spread_vertex >= 0) {
        const Graph h = rep.analyzed();
        if (spread_vertex >= h.order()) throw CLI::ValidationError("--spread", "vertex out of range");
        spread = murlab::mur_spread(h, spread_vertex, opts);
    }

    if (as_json) {
        auto j = murlab::to_json(rep);
        if (spread) j["spread"] = spread_to_json(*spread);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << murlab::summary(rep.result) << "\n";
    if (rep.result.spectral) {
        const auto& sp = *rep.result.spectral;
        std::cout << "spectral instantiation over Q[t]/(" << sp.factor.str("t") << "): "
                  << (sp.verified() ? "verified" : "NOT verified") << ", expected rank <= " << sp.expected_rank << "\n";
        for (const auto& b : sp.branches) std::cout << "  branch " << b.modulus.str("t") << ": rank " << b.rank << "\n";
    }
    if (spread) std::cout << spread_summary(*spread) << "\n";
    return kExitOk;
}

// ------------------------------------------------------------------ batch

struct BatchItem {
    std::size_t line = 0;
    std::string token;
    std::optional<murlab::Report> report;
    std::string error;
};

int cmd_batch(const std::string& path, const Common& common, bool complement, bool as_json, unsigned threads) {
    std::vector<BatchItem> items;
    {
        std::istringstream in(read_file(path));
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::string token;
            if (!(ls >> token) || token[0] == '#') continue;
            items.push_back({lineno, token, std::nullopt, ""});
        }
    }
    const auto opts = common.options();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            auto& item = items[i];
            try {
                item.report = analyze(murlab::parse_graph6(item.token), complement, opts);
            } catch (const std::exception& e) {
                item.error = e.what();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, items.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t exact = 0, interval = 0, errors = 0;
    for (const auto& item : items) {
        if (!item.report) {
            ++errors;
            if (as_json)
                std::cout << json{{"line", item.line}, {"input", item.token}, {"error", item.error}}.dump() << "\n";
            else
                std::cerr << "line " << item.line << ": error: " << item.error << "\n";
            continue;
        }
        (item.report->result.exact ? exact : interval)++;
        if (as_json)
            std::cout << murlab::to_json(*item.report).dump() << "\n";
        else
            std::cout << item.token << "\t" << murlab::summary(item.report->result) << "\n";
    }
    if (as_json) {
        std::cout << json{{"summary",
                           {{"graphs", exact + interval}, {"exact", exact}, {"interval", interval}, {"errors", errors}}}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "graphs: " << exact + interval << ", exact: " << exact << ", interval: " << interval
                  << ", errors: " << errors << "\n";
    }
    return errors ? kExitUsage : kExitOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& suite, const Common& common, int trials, bool as_json) {
    murlab::SuiteOptions opts;
    opts.search = common.options();
    opts.trials = trials;
    const auto results = murlab::run_suite(suite, opts);
    std::size_t failed = 0;
    json rows = json::array();
    for (const auto& r : results) {
        failed += r.passed ? 0 : 1;
        if (as_json) {
            rows.push_back({{"suite", r.suite}, {"tag", r.tag}, {"check", r.name}, {"passed", r.passed},
                            {"detail", r.detail}});
        } else {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.suite << "  [" << r.tag << "]  " << r.name;
            if (!r.detail.empty()) std::cout << "  -- " << r.detail;
            std::cout << "\n";
        }
    }
    if (as_json)
        std::cout << json{{"checks", rows}, {"passed", results.size() - failed}, {"failed", failed}}.dump(2) << "\n";
    else
        std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed ? kExitVerifyFailed : kExitOk;
}

int cmd_fixture(const std::vector<std::string>& names, bool list) {
    if (list) {
        for (const auto& n : murlab::fixture_names()) std::cout << n << "\n";
        return kExitOk;
    }
    bool ok = true;
    for (const auto& name : names) {
        const auto rep = murlab::verify_fixture(name);
        std::cout << (rep.passed ? "PASS " : "FAIL ") << rep.name << "\n";
        for (const auto& line : rep.lines) std::cout << "  " << line << "\n";
        ok = ok && rep.passed;
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------------ replay

int cmd_replay(const std::string& path) {
    std::vector<json> docs;
    const std::string text = read_file(path);
    try {
        docs.push_back(json::parse(text));
    } catch (const json::parse_error&) {
        // JSON lines, as written by batch --json
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos) docs.push_back(json::parse(line));
    }
    std::size_t checked = 0, failed = 0;
    for (const auto& doc : docs) {
        if (!doc.contains("format")) continue;  // batch summary or error record
        const auto rep = murlab::report_from_json(doc);
        const auto res = murlab::replay(rep);
        ++checked;
        failed += res.ok ? 0 : 1;
        std::cout << (res.ok ? "ok    " : "FAIL  ") << doc.at("graph").at("graph6").get<std::string>() << "  "
                  << murlab::summary(rep.result);
        if (!res.ok) std::cout << "  -- " << res.detail;
        std::cout << "\n";
    }
    std::cout << checked - failed << "/" << checked << " reports replayed\n";
    return failed ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum universal rank of simple graphs: exact bounds with replayable certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "murlab 0.1.0");

    Common common;
    bool as_json = false, complement = false, instantiate = false, list = false;
    std::string input, format = "auto", suite, path;
    std::vector<std::string> fixtures;
    int spread = -1, trials = 100;
    unsigned threads = 0;

    auto* mur = app.add_subcommand("mur", "Analyze one graph");
    mur->add_option("input", input, "graph6 string, or a file with a graph6 token or an edge list")->required();
    mur->add_option("--format", format, "Input format")
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "graph6", "edges"}));
    common.add_to(mur);
    mur->add_flag("--json", as_json, "Print a structured report");
    mur->add_flag("--complement", complement, "Analyze the complement of the input");
    mur->add_option("--spread", spread, "Also report the spread at this vertex")->check(CLI::NonNegativeNumber);
    mur->add_flag("--instantiate-spectral", instantiate,
                  "Rank the Laplacian shift over the field of its eigenvalue for cross-validation");

    auto* batch = app.add_subcommand("batch", "Analyze every graph6 line of a file");
    batch->add_option("file", path, "File with one graph6 token per line")->required();
    common.add_to(batch);
    batch->add_flag("--json", as_json, "Print one report per line (JSON lines) and a summary record");
    batch->add_flag("--complement", complement, "Analyze complements");
    batch->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(murlab::suite_names()));
    common.add_to(verify);
    verify->add_option("--trials", trials, "Random trials for property checks")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_flag("--json", as_json, "Print the table as JSON");

    auto* fixture = app.add_subcommand("fixture", "Replay named explicit constructions");
    fixture->add_option("names", fixtures, "Fixture names")->check(CLI::IsMember(murlab::fixture_names()));
    fixture->add_flag("--list", list, "List fixture names");

    auto* replay = app.add_subcommand("replay", "Re-check every certificate in a report file");
    replay->add_option("file", path, "Report from 'mur --json' or 'batch --json'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*mur) return cmd_mur(input, format, common, complement, as_json, spread, instantiate);
        if (*batch) return cmd_batch(path, common, complement, as_json, threads);
        if (*verify) return cmd_verify(suite, common, trials, as_json);
        if (*fixture) {
            if (!list && fixtures.empty()) {
                std::cerr << "fixture: give at least one name or --list\n";
                return kExitUsage;
            }
            return cmd_fixture(fixtures, list);
        }
        if (*replay) return cmd_replay(path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const murlab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "report error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
