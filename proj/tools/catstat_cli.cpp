// Command-line surface: enumeration tables, bijection application,
// closed-form series expansion, and the verification suite.
//
// Exit codes: 0 success / all checks passed, 1 a verification check
// failed, 2 usage or validation error.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catstat/bijections.hpp"
#include "catstat/checks.hpp"
#include "catstat/closed_forms.hpp"
#include "catstat/oracle.hpp"
#include "catstat/series.hpp"

namespace {

using namespace catstat;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

int cmd_distribution(const std::string& klass, int n, const std::string& stats_arg,
                     const std::string& format) {
    std::vector<StatName> stats;
    for (const std::string& s : split(stats_arg, ',')) stats.push_back(stat_from_string(s));
    const DistributionTable table = distribution(perm_class_from_string(klass), n, stats);
    if (format == "csv") {
        std::cout << to_csv(table);
    } else if (format == "json") {
        std::cout << to_json(table) << '\n';
    } else {
        std::cout << "class=" << table.klass << " n=" << table.n << '\n';
        for (const auto& [key, count] : table.entries) {
            for (size_t i = 0; i < stats.size(); ++i)
                std::cout << to_string(stats[i]) << '=' << key[i] << ' ';
            std::cout << "count=" << count << '\n';
        }
    }
    return 0;
}

int cmd_map(const std::string& bijection, const std::string& perm_arg, const std::string& format) {
    const Permutation pi = parse_permutation(perm_arg);
    DyckPath d;
    if (bijection == "rs") d = rs(pi);
    else if (bijection == "krat") d = krat(pi);
    else if (bijection == "bjs") d = staircase_bijection(pi, StairVariant::bjs);
    else if (bijection == "kra") d = staircase_bijection(pi, StairVariant::kra);
    else if (bijection == "bij4") d = staircase_bijection(pi, StairVariant::bij4);
    else throw CLI::ValidationError("--bijection", "unknown bijection: " + bijection);

    const PathStats ps = path_stats(d);
    const TunnelStats ts = tunnel_stats(d, 0);
    if (format == "json") {
        nlohmann::json j;
        j["perm"] = to_string(pi);
        j["bijection"] = bijection;
        j["word"] = to_string(d);
        j["stats"] = {{"h", ps.hills},     {"dr", ps.double_rises}, {"va", ps.valleys},
                      {"peaks", ps.peaks}, {"p2", ps.peaks_ge2},    {"uud", count_uud(d)},
                      {"ct", ts.ct},       {"lt", ts.lt}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "word=" << to_string(d) << '\n'
                  << "h=" << ps.hills << " dr=" << ps.double_rises << " va=" << ps.valleys
                  << " peaks=" << ps.peaks << " p2=" << ps.peaks_ge2 << " uud=" << count_uud(d)
                  << " ct=" << ts.ct << " lt=" << ts.lt << '\n';
    }
    return 0;
}

int cmd_paths(int n, const std::string& stats_arg, const std::string& format) {
    std::vector<StatName> stats;
    for (const std::string& s : split(stats_arg, ',')) {
        const StatName name = stat_from_string(s);
        if (is_perm_stat(name))
            throw CLI::ValidationError("--stats", "permutation statistic " + s +
                                                      " not defined on Dyck paths");
        stats.push_back(name);
    }
    const bool csv = format == "csv";
    if (csv) {
        std::cout << "word";
        for (StatName s : stats) std::cout << ',' << to_string(s);
        std::cout << '\n';
    }
    enumerate_dyck(n, [&](const DyckPath& d) {
        std::cout << to_string(d);
        for (StatName s : stats) {
            std::cout << (csv ? "," : " ") << (csv ? "" : to_string(s) + "=")
                      << path_stat_value(d, s);
        }
        std::cout << '\n';
    });
    return 0;
}

int cmd_series(const std::string& name, int order, const std::string& window_arg) {
    GfParams params;
    params.order = order;
    for (const std::string& piece : split(window_arg, ',')) {
        if (piece.empty()) continue;
        // syntax: v=-8:8 or y=-6:6
        const auto eq = piece.find('=');
        const auto colon = piece.find(':', eq);
        if (eq == std::string::npos || colon == std::string::npos)
            throw CLI::ValidationError("--window", "expected var=lo:hi, got " + piece);
        const std::string var = piece.substr(0, eq);
        const Interval band{std::stoi(piece.substr(eq + 1, colon - eq - 1)),
                            std::stoi(piece.substr(colon + 1))};
        if (var == "v") params.v = band;
        else if (var == "y") params.y = band;
        else throw CLI::ValidationError("--window", "only v and y windows can be overridden");
    }
    std::cout << canonical_text(closed_form(gf_name_from_string(name), params));
    return 0;
}

int cmd_verify(const std::string& check, bool all, std::optional<long long> n,
               std::optional<long long> order, const std::string& format) {
    std::map<std::string, long long> overrides;
    if (n) overrides["n"] = *n;
    if (order) overrides["order"] = *order;
    std::vector<std::string> ids;
    if (all) ids = check_catalog();
    else if (!check.empty()) ids.push_back(check);
    else throw CLI::ValidationError("verify", "need --check ID or --all");

    bool all_pass = true;
    for (const std::string& id : ids) {
        const CheckReport report = run_check(id, overrides);
        all_pass = all_pass && report.pass;
        if (format == "json") {
            std::cout << to_json(report) << '\n';
        } else {
            std::cout << (report.pass ? "[PASS] " : "[FAIL] ") << report.check_id << " (";
            bool first = true;
            for (const auto& [k, v] : report.params) {
                if (!first) std::cout << ' ';
                std::cout << k << '=' << v;
                first = false;
            }
            std::cout << "): " << report.detail << " [" << report.seconds << "s]\n";
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact statistics, bijections and generating functions for "
                 "pattern-avoiding permutations and Dyck paths"};
    app.require_subcommand(1);

    std::string klass = "321", stats = "fp,exc", format = "text";
    std::string bijection = "rs", perm, series_name = "f321", window_arg, check_id;
    int n = 6, order = 8;
    bool all_checks = false;
    std::optional<long long> n_override, order_override;

    auto* dist = app.add_subcommand("distribution", "joint statistic counts over a class");
    dist->add_option("--class", klass, "321 | 132 | all")->capture_default_str();
    dist->add_option("--n", n, "permutation length")->required();
    dist->add_option("--stats", stats, "comma-separated statistics, e.g. fp,exc[,des]")
        ->capture_default_str();
    dist->add_option("--format", format, "text | csv | json")->capture_default_str();

    auto* map_cmd = app.add_subcommand("map", "apply a bijection to one permutation");
    map_cmd->add_option("--bijection", bijection, "rs | krat | bjs | kra | bij4")
        ->capture_default_str();
    map_cmd->add_option("--perm", perm, "permutation (digits, or comma-separated)")->required();
    map_cmd->add_option("--format", format, "text | json")->capture_default_str();

    auto* paths = app.add_subcommand("paths", "per-path statistics over all Dyck paths");
    paths->add_option("--n", n, "semilength")->required();
    paths->add_option("--stats", stats, "comma-separated path statistics")
        ->default_val("h,dr,va,p2,ct,lt");
    paths->add_option("--format", format, "text | csv")->capture_default_str();

    auto* series = app.add_subcommand("series", "canonical truncated expansion of a closed form");
    series->add_option("--name", series_name,
                       "catalan | f321_q | f321 | f321_des | f132x | g | h1 | h2 | h3")
        ->capture_default_str();
    series->add_option("--order", order, "truncation order")->required();
    series->add_option("--window", window_arg, "band overrides, e.g. v=-8:8,y=-6:6");

    auto* verify = app.add_subcommand("verify", "run verification checks");
    verify->add_option("--check", check_id, "check id (see --all for the catalog)");
    verify->add_flag("--all", all_checks, "run the whole catalog");
    verify->add_option("--n", n_override, "override the n parameter where applicable");
    verify->add_option("--order", order_override, "override the order parameter where applicable");
    verify->add_option("--format", format, "text | json")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (dist->parsed()) return cmd_distribution(klass, n, stats, format);
        if (map_cmd->parsed()) return cmd_map(bijection, perm, format);
        if (paths->parsed()) return cmd_paths(n, stats, format);
        if (series->parsed()) return cmd_series(series_name, order, window_arg);
        if (verify->parsed())
            return cmd_verify(check_id, all_checks, n_override, order_override, format);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << app.help() << '\n' << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
