// Command-line runner for the named verification suites. Reports are
// machine-readable JSON or a plain table; exit status is 0 when every check
// passes, 1 on any failing check, 2 on usage or configuration errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ymick/error.hpp"
#include "ymick/rational.hpp"
#include "ymick/suites.hpp"

namespace {

using nlohmann::ordered_json;

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

ymick::Weight parse_mu(const std::string& text) {
    ymick::Weight mu;
    for (const auto& part : split(text, ',')) mu.push_back(ymick::rat_parse(trim(part)));
    return mu;
}

ymick::Perm parse_sigma(const std::string& text) {
    ymick::Perm sigma;
    for (const auto& part : split(text, ',')) {
        std::string p = trim(part);
        ymick::Rational r = ymick::rat_parse(p);
        if (!ymick::is_integer(r))
            throw ymick::Error("ParseError", "sigma entry is not an integer: '" + p + "'");
        sigma.push_back(static_cast<int>(numerator(r).convert_to<long long>()));
    }
    return sigma;
}

long long parse_int(const std::string& key, const std::string& value) {
    ymick::Rational r = ymick::rat_parse(value);
    if (!ymick::is_integer(r))
        throw ymick::Error("ParseError", key + " must be an integer, got '" + value + "'");
    return numerator(r).convert_to<long long>();
}

// Plain-text configuration: `key = value` lines, `#` comments, with an
// optional `[suite-name]` section scoping overrides to one suite.
std::map<std::string, std::map<std::string, std::string>> parse_config(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ymick::Error("ConfigError", "cannot read config file '" + path + "'");
    std::map<std::string, std::map<std::string, std::string>> sections;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        auto hash = t.find('#');
        if (hash != std::string::npos) t = trim(t.substr(0, hash));
        if (t.empty()) continue;
        if (t.front() == '[' && t.back() == ']') {
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ymick::Error("ConfigError", path + ":" + std::to_string(lineno) +
                                                  ": expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ymick::Error("ConfigError", path + ":" + std::to_string(lineno) +
                                                  ": empty key or value");
        sections[section][key] = value;
    }
    return sections;
}

struct Options {
    ymick::SuiteParams params;
    std::string format = "json";
    std::string out_path;
};

ordered_json report_json(const ymick::Report& report) {
    const auto& p = report.params;
    ordered_json params;
    params["m"] = p.m;
    params["n"] = p.n;
    params["l"] = p.l;
    params["N"] = p.N;
    params["order"] = p.S;
    ordered_json mu = ordered_json::array();
    for (const auto& x : p.mu ? *p.mu : ymick::default_mu(p.m))
        mu.push_back(ymick::rat_str(x));
    params["mu"] = mu;
    if (p.sigma) {
        ordered_json sigma = ordered_json::array();
        for (int v : *p.sigma) sigma.push_back(v);
        params["sigma"] = sigma;
    } else {
        params["sigma"] = nullptr;
    }
    params["seed"] = p.seed;
    params["cap"] = p.cap;

    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json entry;
        entry["name"] = c.name;
        entry["status"] = c.ok ? "pass" : "fail";
        if (c.ok)
            entry["diagnostic"] = nullptr;
        else
            entry["diagnostic"] = c.diagnostic;
        checks.push_back(entry);
    }

    ordered_json j;
    j["suite"] = p.suite;
    j["params"] = params;
    j["checks"] = checks;
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

std::string report_table(const ymick::Report& report) {
    const auto& p = report.params;
    std::string out = "suite: " + p.suite + "\n";
    out += "params: m=" + std::to_string(p.m) + " n=" + std::to_string(p.n) +
           " l=" + std::to_string(p.l) + " N=" + std::to_string(p.N) +
           " order=" + std::to_string(p.S) +
           " mu=" + ymick::weight_str(p.mu ? *p.mu : ymick::default_mu(p.m));
    if (p.sigma) {
        out += " sigma=(";
        for (std::size_t i = 0; i < p.sigma->size(); ++i)
            out += (i ? "," : "") + std::to_string((*p.sigma)[i]);
        out += ")";
    }
    out += " seed=" + std::to_string(p.seed) + " cap=" + std::to_string(p.cap) + "\n";
    std::size_t width = 0;
    for (const auto& c : report.checks) width = std::max(width, c.name.size());
    int failed = 0;
    for (const auto& c : report.checks) {
        out += c.ok ? "  pass  " : "  FAIL  ";
        out += c.name;
        if (!c.ok) {
            out += std::string(width - c.name.size() + 2, ' ');
            out += c.diagnostic;
            ++failed;
        }
        out += "\n";
    }
    out += "result: " + std::to_string(report.checks.size() - failed) + " passed, " +
           std::to_string(failed) + " failed in " + std::to_string(report.elapsed_ms) +
           " ms\n";
    return out;
}

int emit(const ymick::Report& report, const Options& opt) {
    std::string text;
    if (opt.format == "json")
        text = report_json(report).dump(2) + "\n";
    else
        text = report_table(report);
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path);
        if (!out)
            throw ymick::Error("ConfigError",
                               "cannot write report to '" + opt.out_path + "'");
        out << text;
    }
    return report.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suites over rational arithmetic"};
    app.require_subcommand(1);
    CLI::App* check = app.add_subcommand("check", "Run a named verification suite");

    Options opt;
    std::string mu_text, sigma_text, config_path;
    check->add_option("suite", opt.params.suite,
                      "Suite name ('all' runs every suite)")
        ->required();
    check->add_option("--m", opt.params.m, "Row count m");
    check->add_option("--n", opt.params.n, "Column count n");
    check->add_option("--l", opt.params.l, "Complementary block size l");
    check->add_option("--N", opt.params.N, "Tensor leg count N");
    check->add_option("--order", opt.params.S, "Series truncation order S");
    check->add_option("--mu", mu_text, "Weight labels, e.g. 1/3,2/3");
    check->add_option("--sigma", sigma_text, "Permutation of 1..m, e.g. 2,1,3");
    check->add_option("--seed", opt.params.seed, "Seed for randomized searches");
    check->add_option("--format", opt.format, "Report format: json or table");
    check->add_option("--out", opt.out_path, "Write the report to this file");
    check->add_option("--config", config_path,
                      "Config file path (default: ./ymick.conf when present)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (config_path.empty()) {
            std::ifstream probe("ymick.conf");
            if (probe) config_path = "ymick.conf";
        }
        if (!config_path.empty()) {
            auto sections = parse_config(config_path);
            auto apply = [&](const std::map<std::string, std::string>& kv) {
                for (const auto& [key, value] : kv) {
                    if (key == "m" && !check->count("--m"))
                        opt.params.m = static_cast<int>(parse_int(key, value));
                    else if (key == "n" && !check->count("--n"))
                        opt.params.n = static_cast<int>(parse_int(key, value));
                    else if (key == "l" && !check->count("--l"))
                        opt.params.l = static_cast<int>(parse_int(key, value));
                    else if (key == "N" && !check->count("--N"))
                        opt.params.N = static_cast<int>(parse_int(key, value));
                    else if (key == "order" && !check->count("--order"))
                        opt.params.S = static_cast<int>(parse_int(key, value));
                    else if (key == "mu" && !check->count("--mu"))
                        opt.params.mu = parse_mu(value);
                    else if (key == "sigma" && !check->count("--sigma"))
                        opt.params.sigma = parse_sigma(value);
                    else if (key == "seed" && !check->count("--seed"))
                        opt.params.seed =
                            static_cast<unsigned long long>(parse_int(key, value));
                    else if (key == "cap")
                        opt.params.cap = parse_int(key, value);
                    else if (key == "format" && !check->count("--format"))
                        opt.format = value;
                    else if (key == "out" && !check->count("--out"))
                        opt.out_path = value;
                    else if (key == "m" || key == "n" || key == "l" || key == "N" ||
                             key == "order" || key == "mu" || key == "sigma" ||
                             key == "seed" || key == "format" || key == "out") {
                        // overridden on the command line
                    } else {
                        throw ymick::Error("ConfigError",
                                           "unknown config key '" + key + "'");
                    }
                }
            };
            apply(sections[""]);
            apply(sections[opt.params.suite]);
        }
        if (!mu_text.empty()) opt.params.mu = parse_mu(mu_text);
        if (!sigma_text.empty()) opt.params.sigma = parse_sigma(sigma_text);
        if (opt.format != "json" && opt.format != "table")
            throw ymick::Error("ConfigError",
                               "format must be 'json' or 'table', got '" + opt.format +
                                   "'");

        ymick::Report report = ymick::run_suite(opt.params);
        return emit(report, opt);
    } catch (const ymick::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
