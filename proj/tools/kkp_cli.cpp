/*
   Copyright 2026 The kkpencil Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// kkp: command-line front end. Exit status 0 on success, 1 when a verified claim fails, 2 on usage errors.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kkp/kkp.hpp"

using namespace kkp;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int p = 5;
    int k = 1;
    std::string sig;
    std::string group = "semidirect";
    std::string format = "json";
    std::string out;
};

void require_prime(int p) {
    if (p == 2 || p == 3)
        throw UsageError("p = " + std::to_string(p) +
                         " is excluded: the genus 3 and genus 10 cases are classical; use a prime p >= 5");
    if (p < 5 || !is_prime(p)) throw UsageError("p must be a prime >= 5, got " + std::to_string(p));
}

GroupSpec spec_for(const Options& o) {
    if (o.group == "semidirect") return GroupSpec::semidirect(o.p);
    if (o.group == "central") return GroupSpec::central(o.p);
    if (o.group == "inverting") return GroupSpec::inverting(o.p);
    if (o.group == "fermat") return GroupSpec::fermat(o.p);
    throw UsageError("unknown group '" + o.group + "' (semidirect, central, inverting, fermat)");
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f) return;
    throw UsageError("format '" + o.format + "' is not available for this command");
}

int finish(const CheckList& checks) {
    if (const auto* f = checks.first_failure()) {
        std::cerr << "check failed: " << f->name << ": expected " << f->expected << ", got " << f->actual << "\n";
        return kVerificationFailed;
    }
    return kOk;
}

int group_info(const Options& o) {
    require_format(o, {"json", "md"});
    const auto spec = spec_for(o);
    const auto c = group_census(spec);
    CheckList checks;
    checks.add("relators hold", true, c.relators_hold);
    if (!spec.extended() && spec.modulus == o.p) {
        checks.add("involutions", 3 * o.p, c.involutions);
        checks.add("order 3 elements", 2 * o.p * o.p, c.order_three);
    }
    json j = to_json(c);
    j["schema_version"] = kReportSchemaVersion;
    j["group"] = o.group;
    j["p"] = o.p;
    j["generators"] = spec.generator_names();
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "| field | value |\n|---|---|\n";
        for (const auto& [key, v] : j.items()) std::cout << "| " << key << " | " << v.dump() << " |\n";
    }
    return finish(checks);
}

int classify_cmd(const Options& o) {
    require_format(o, {"json", "md", "csv"});
    const auto spec = spec_for(o);
    const auto& g = Group::get(spec);
    Signature sig;
    try {
        sig = o.sig.empty() ? Signature(0, {2, 2, 3, o.p}) : parse_signature(o.sig);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad --sig: ") + e.what());
    }
    if (sig.genus != 0) throw UsageError("only genus-0 signatures are supported");
    require_hyperbolic(sig);
    auto cl = classify_actions(g, sig);
    if (spec == GroupSpec::semidirect(o.p) && sig == Signature(0, {2, 2, 3, o.p})) label_theta_strata(cl);
    if (spec == GroupSpec::semidirect(o.p) && sig == Signature(0, {3, 2 * o.p, 2 * o.p})) label_phi_strata(cl);
    if (spec == GroupSpec::central(o.p) && sig == Signature(0, {2, 6, 2 * o.p})) cl.label(Theta1(g), "Theta1");
    if (spec == GroupSpec::inverting(o.p) && sig == Signature(0, {2, 6, 2 * o.p})) cl.label(Theta2(g), "Theta2");
    if (o.format == "json") {
        std::cout << json{{"schema_version", kReportSchemaVersion},
                          {"p", o.p},
                          {"group", o.group},
                          {"signature", to_string(sig)},
                          {"vectors", cl.total()},
                          {"strata", strata_json(cl)}}
                         .dump(2)
                  << "\n";
    } else if (o.format == "csv") {
        std::cout << "stratum,orbit_size,labels,representative\n";
        for (std::size_t i = 0; i < cl.strata.size(); ++i) {
            std::string labels;
            for (const auto& l : cl.strata[i].labels) labels += (labels.empty() ? "" : " ") + l;
            std::cout << i << ',' << cl.strata[i].orbit_size << ",\"" << labels << "\",\""
                      << to_string(cl.strata[i].representative) << "\"\n";
        }
    } else {
        std::cout << cl.strata.size() << " strata of " << to_string(sig) << " over " << cl.total()
                  << " vectors\n\n| representative | vectors | labels |\n|---|---|---|\n";
        for (const auto& s : cl.strata) {
            std::string labels;
            for (const auto& l : s.labels) labels += (labels.empty() ? "" : ", ") + l;
            std::cout << "| " << md_cell(to_string(s.representative)) << " | " << s.orbit_size << " | " << labels << " |\n";
        }
    }
    return kOk;
}

int table_cmd(const Options& o) {
    if (o.k < 1 || o.k > o.p - 2) throw UsageError("--k must lie in 1..p-2");
    const auto rows = subgroup_quotient_table(o.p, o.k);
    CheckList checks;
    for (const auto& r : rows) checks.add("double accounting " + r.subgroup, true, r.double_accounting);
    if (o.format == "json")
        std::cout << json{{"schema_version", kReportSchemaVersion}, {"p", o.p}, {"k", o.k}, {"rows", table_json(rows)}}
                         .dump(2)
                  << "\n";
    else if (o.format == "csv")
        std::cout << table_csv(rows);
    else
        std::cout << table_markdown(rows);
    return finish(checks);
}

int extend_cmd(const Options& o) {
    require_format(o, {"json", "md"});
    const auto d = decide_extensions(o.p);
    auto j = extension_report(d);
    j["schema_version"] = kReportSchemaVersion;
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& s : j["supergroups"])
            std::cout << "- " << s["group"].get<std::string>() << ": " << s["actions"] << " actions, " << s["classes"]
                      << " class(es)\n";
        for (const auto& e : j["extensions"])
            std::cout << "- " << e["from"].get<std::string>() << " extends to " << e["to"].get<std::string>() << "\n";
        for (const auto& c : j["caveats"]) std::cout << "- caveat: " << c.get<std::string>() << "\n";
        for (const auto& s : j["bounds"]["ladder"])
            std::cout << "- lambda = " << s["lambda"] << ", order " << s["order"] << ": "
                      << s["status"].get<std::string>() << "\n";
    }
    return kOk;
}

int triangle_cmd(const Options& o) {
    require_format(o, {"json", "md"});
    CheckList checks;
    auto j = triangle_report(o.p, &checks);
    j["schema_version"] = kReportSchemaVersion;
    j["p"] = o.p;
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j["classes"] << " classes of " << j["signature"].get<std::string>() << " (" << j["rigid_classes"]
                  << " without extension)\n\n| representative | vectors | labels |\n|---|---|---|\n";
        for (const auto& s : j["strata"]) {
            std::string labels;
            for (const auto& l : s["labels"]) labels += (labels.empty() ? "" : ", ") + l.get<std::string>();
            std::cout << "| " << md_cell(s["representative"].get<std::string>()) << " | " << s["orbit_size"] << " | "
                      << labels << " |\n";
        }
    }
    return finish(checks);
}

int curve_cmd(const Options& o) {
    require_format(o, {"json", "md"});
    auto j = curve_report(o.p);
    j["schema_version"] = kReportSchemaVersion;
    CheckList checks;
    for (const auto& m : j["members"])
        for (const auto& c : m["checks"])
            checks.add("t=" + m["t"].get<std::string>() + ": " + c["name"].get<std::string>(), true,
                       c["passed"].get<bool>());
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& m : j["members"]) {
            std::cout << "t = " << m["t"].get<std::string>() << " (" << m["member"].get<std::string>() << ")\n";
            for (const auto& c : m["checks"])
                std::cout << "  [" << (c["passed"].get<bool>() ? "x" : " ") << "] " << c["name"].get<std::string>()
                          << (c.contains("detail") ? ": " + c["detail"].dump() : "") << "\n";
        }
    }
    return finish(checks);
}

int report_cmd(const Options& o) {
    require_format(o, {"json", "md"});
    const auto r = full_report(o.p);
    const std::string md = report_markdown(r.json);
    if (!o.out.empty()) {
        std::filesystem::create_directories(o.out);
        const std::string stem = o.out + "/report_p" + std::to_string(o.p);
        std::ofstream(stem + ".json") << r.json.dump(2) << "\n";
        std::ofstream(stem + ".md") << md;
        std::cout << "wrote " << stem << ".json and " << stem << ".md\n";
    } else if (o.format == "json") {
        std::cout << r.json.dump(2) << "\n";
    } else {
        std::cout << md;
    }
    return finish(r.checks);
}

/// Fills options missing from the command line with values from an INI-style file.
void apply_config(const std::string& path, const CLI::App& sub, Options& o) {
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI().from_file(path);
    } catch (const CLI::Error& e) {
        throw UsageError(std::string("cannot read config: ") + e.what());
    }
    for (const auto& item : items) {
        const std::string key = item.name;
        if (key == "++" || key == "--") continue;  // section markers
        const auto* opt = sub.get_option_no_throw("--" + key);
        if (opt == nullptr || key == "config") throw UsageError("config key '" + key + "' does not apply here");
        if (opt->count() > 0) continue;
        if (item.inputs.size() != 1) throw UsageError("config key '" + key + "' needs a single value");
        const std::string& value = item.inputs.front();
        try {
            if (key == "p") o.p = std::stoi(value);
            else if (key == "k") o.k = std::stoi(value);
            else if (key == "sig") o.sig = value;
            else if (key == "group") o.group = value;
            else if (key == "out") o.out = value;
            else if (key == "format") {
                if (value != "json" && value != "csv" && value != "md")
                    throw UsageError("config format must be json, csv or md");
                o.format = value;
            }
        } catch (const std::logic_error&) {
            throw UsageError("config key '" + key + "' has a non-integer value '" + value + "'");
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Group actions of Z_p^2 x| D_3 on Riemann surfaces of genus (p-1)(2p-1)"};
    app.require_subcommand(1);
    Options o;
    std::string config;
    CLI::App* active = nullptr;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config, "key = value file; command-line options take precedence")
            ->check(CLI::ExistingFile);
        sub->add_option("--p", o.p, "prime p >= 5")->capture_default_str();
        sub->add_option("--format", o.format, "json, csv or md")
            ->check(CLI::IsMember({"json", "csv", "md"}))
            ->capture_default_str();
    };
    int (*handler)(const Options&) = nullptr;

    auto* group = app.add_subcommand("group", "group commands");
    group->require_subcommand(1);
    auto* info = group->add_subcommand("info", "order, element census, |Aut|");
    common(info);
    info->add_option("--group", o.group, "semidirect, central, inverting or fermat")->capture_default_str();
    info->callback([&, info] { active = info; handler = group_info; });

    auto* classify = app.add_subcommand("classify", "strata of a genus-0 signature");
    common(classify);
    classify->add_option("--sig", o.sig, "signature, e.g. \"(0;2,2,3,5)\"");
    classify->add_option("--group", o.group, "semidirect, central, inverting or fermat")->capture_default_str();
    classify->callback([&, classify] { active = classify; handler = classify_cmd; });

    auto* table = app.add_subcommand("table", "quotient table of theta_k");
    common(table);
    table->add_option("--k", o.k, "1 <= k <= p-2")->capture_default_str();
    table->callback([&, table] { active = table; handler = table_cmd; });

    auto* extend = app.add_subcommand("extend", "extensions, order 18p^2 search and bounds");
    common(extend);
    extend->callback([&, extend] { active = extend; handler = extend_cmd; });

    auto* triangle = app.add_subcommand("classify-triangle", "the (0;3,2p,2p) family");
    common(triangle);
    triangle->callback([&, triangle] { active = triangle; handler = triangle_cmd; });

    auto* curve = app.add_subcommand("curve", "pencil checks");
    curve->require_subcommand(1);
    auto* verify = curve->add_subcommand("verify", "invariance, fixed points, singular and Fermat members");
    common(verify);
    verify->callback([&, verify] { active = verify; handler = curve_cmd; });

    auto* report = app.add_subcommand("report", "run everything for one prime");
    common(report);
    report->add_option("--out", o.out, "directory for report_p<P>.json and .md");
    report->callback([&, report] { active = report; handler = report_cmd; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        if (!config.empty()) apply_config(config, *active, o);
        require_prime(o.p);
        return handler(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerificationFailed;
    }
}
