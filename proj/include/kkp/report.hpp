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

#ifndef KKP_REPORT_HPP
#define KKP_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kkp/actions.hpp"
#include "kkp/curve.hpp"
#include "kkp/extensions.hpp"
#include "kkp/quotients.hpp"

namespace kkp {

inline constexpr const char* kReportSchemaVersion = "1.0";

/// One verified claim: both sides are kept as text so failures can be printed verbatim.
struct ReportCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool passed = false;
    bool informational = false;  // reported but never fails the run
};

inline nlohmann::json to_json(const ReportCheck& c) {
    nlohmann::json j{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}};
    if (c.informational) j["informational"] = true;
    return j;
}

class CheckList {
   public:
    template <class A, class B>
    void add(std::string name, const A& expected, const B& actual, bool informational = false) {
        ReportCheck c{std::move(name), text(expected), text(actual), false, informational};
        c.passed = c.expected == c.actual;
        checks_.push_back(std::move(c));
    }
    const std::vector<ReportCheck>& checks() const { return checks_; }
    const ReportCheck* first_failure() const {
        for (const auto& c : checks_)
            if (!c.passed && !c.informational) return &c;
        return nullptr;
    }
    nlohmann::json json() const {
        auto a = nlohmann::json::array();
        for (const auto& c : checks_) a.push_back(to_json(c));
        return a;
    }

   private:
    template <class T>
    static std::string text(const T& v) {
        if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else {
            std::ostringstream os;
            os << v;
            return os.str();
        }
    }
    std::vector<ReportCheck> checks_;
};

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct GroupCensus {
    std::size_t order = 0;
    std::size_t involutions = 0;
    std::size_t order_three = 0;
    std::size_t order_p = 0;
    std::size_t automorphisms = 0;
    bool relators_hold = false;
};

inline GroupCensus group_census(const GroupSpec& spec) {
    const auto& g = Group::get(spec);
    GroupCensus c;
    c.order = g.order();
    for (std::size_t i = 0; i < g.order(); ++i) {
        const int o = g.order_of(g.element_at(i));
        c.involutions += o == 2;
        c.order_three += o == 3;
        c.order_p += o == spec.modulus;
    }
    c.automorphisms = automorphism_group(spec).size();
    c.relators_hold = verify_presentation(g, g.standard_relators());
    return c;
}

inline nlohmann::json to_json(const GroupCensus& c) {
    return {{"order", c.order},
            {"involutions", c.involutions},
            {"order_3_elements", c.order_three},
            {"order_m_elements", c.order_p},
            {"automorphisms", c.automorphisms},
            {"relators_hold", c.relators_hold}};
}

inline nlohmann::json strata_json(const Classification& c) {
    auto a = nlohmann::json::array();
    for (const auto& s : c.strata)
        a.push_back({{"representative", to_string(s.representative)}, {"orbit_size", s.orbit_size}, {"labels", s.labels}});
    return a;
}

/// (0;3,2p,2p): classes, phi labels, the n <-> 1/n pairing and the Delta_0 restriction of Theta1.
inline nlohmann::json triangle_report(int p, CheckList* checks = nullptr) {
    const auto& g = Group::get(GroupSpec::semidirect(p));
    auto cl = classify_actions(g, Signature(0, {3, 2 * p, 2 * p}));
    label_phi_strata(cl);
    const auto orbits = pairing_map_orbits(p);
    bool pairing = true;
    for (const auto& o : orbits.phi)
        for (int n : o) pairing = pairing && cl.stratum_of(phi_n(g, n)) == cl.stratum_of(phi_n(g, o.front()));
    PullBack pull(g);
    const auto y1 = pull(restrict(delta0_restriction(Theta1(Group::get(GroupSpec::central(p))))));
    const bool y1_is_phi1 = y1 && cl.stratum_of(*y1) == cl.stratum_of(phi_n(g, 1));
    if (checks) {
        checks->add("triangle classes", 2 + (p - 3) / 2, cl.strata.size());
        checks->add("triangle phi_n ~ phi_(1/n)", true, pairing);
        checks->add("Delta_0 restriction of Theta1 ~ phi_1", true, y1_is_phi1);
    }
    return {{"signature", to_string(Signature(0, {3, 2 * p, 2 * p}))},
            {"vectors", cl.total()},
            {"classes", cl.strata.size()},
            {"rigid_classes", orbits.phi.size()},
            {"pairing_orbits", orbits.phi},
            {"strata", strata_json(cl)},
            {"delta0_restriction_is_phi_1", y1_is_phi1}};
}

/// Everything for one prime: the JSON bundle and the list of checks it rests on.
struct FullReport {
    nlohmann::json json;
    CheckList checks;
};

inline FullReport full_report(int p) {
    FullReport r;
    auto& ch = r.checks;
    auto& j = r.json;
    j["schema_version"] = kReportSchemaVersion;
    j["p"] = p;

    const auto genus = rh_genus(6LL * p * p, Signature(0, {2, 2, 3, p}));
    ch.add("genus", static_cast<long long>(p - 1) * (2 * p - 1), genus);
    j["genus"] = genus;

    const auto census = group_census(GroupSpec::semidirect(p));
    ch.add("involutions", 3 * p, census.involutions);
    ch.add("order 3 elements", 2 * p * p, census.order_three);
    j["group"] = to_json(census);
    nlohmann::json pres;
    for (const auto& spec : {GroupSpec::semidirect(p), GroupSpec::fermat(p), GroupSpec::central(p),
                             GroupSpec::inverting(p)}) {
        const auto& g = Group::get(spec);
        const bool ok = spec == GroupSpec::fermat(p) ? verify_presentation(g, fermat_relator_texts(spec.names, p))
                                                     : verify_presentation(g, g.standard_relators());
        const std::string key = spec == GroupSpec::fermat(p) ? "fermat" : to_string(spec.extension);
        ch.add("relators " + key, true, ok);
        pres[key] = {{"order", g.order()}, {"relators_hold", ok}};
    }
    j["presentations"] = pres;

    const auto d = decide_extensions(p);
    const auto& g = Group::get(GroupSpec::semidirect(p));
    const std::size_t bound = p % 3 == 1 ? (p + 1) / 2 : (p - 1) / 2;
    ch.add("strata within bound", true, d.theta.strata.size() <= bound);
    bool labelled = true;
    for (const auto& s : d.theta.strata) labelled = labelled && !s.labels.empty();
    ch.add("every stratum contains a theta_k", true, labelled);
    ch.add("theta_0 ~ theta_1", true, d.theta.stratum_of(theta_k(g, 0)) == d.theta.stratum_of(theta_k(g, 1)));
    ch.add("theta_2 ~ theta_(p-1)", true, d.theta.stratum_of(theta_k(g, 2)) == d.theta.stratum_of(theta_k(g, p - 1)));
    j["strata"] = {{"signature", to_string(Signature(0, {2, 2, 3, p}))},
                   {"vectors", d.theta.total()},
                   {"bound", bound},
                   {"classes", strata_json(d.theta)}};

    nlohmann::json tables;
    bool accounting = true, gonal = false;
    for (int k = 1; k <= p - 2; ++k) {
        const auto rows = subgroup_quotient_table(p, k);
        for (const auto& row : rows) accounting = accounting && row.double_accounting;
        tables["k=" + std::to_string(k)] = table_json(rows);
        gonal = gonal || is_cyclic_n_gonal(theta_k(g, k));
    }
    ch.add("double accounting on every table row", true, accounting);
    ch.add("cyclic n-gonal for some k", false, gonal);
    j["quotient_tables"] = tables;
    j["cyclic_n_gonal"] = gonal;

    const auto ab = subgroup_generated(g, {g.eval("a"), g.eval("b")});
    const auto pts = points_with_nontrivial_stabilizer(theta_k(g, 1), ab);
    std::set<std::size_t> stabs;
    for (const auto& [pt, o] : pts) stabs.insert(o);
    ch.add("lattice fixed points", 6 * p, pts.size());
    ch.add("lattice stabilizer orders", std::to_string(p), stabs.size() == 1 ? std::to_string(*stabs.begin()) : "mixed");
    j["lattice_fixed_points"] = {{"points", pts.size()}, {"stabilizer_order", p}};

    const bool outside = p == 11;
    const auto t1 = d.theta.stratum_of(theta_k(g, 1));
    const auto t2 = d.theta.stratum_of(theta_k(g, 2));
    for (const auto& sg : d.supergroups) {
        const auto target = sg.name == "H2" ? t2 : t1;
        const bool lands = sg.landed.size() == 1 && sg.landed.begin()->first == *target;
        ch.add(sg.name + " restrictions land in " + (sg.name == "H2" ? "theta_2" : "theta_1"), true, lands, outside);
        if (sg.name != "Fermat") ch.add(sg.name + " classes", 1, sg.classes, outside);
    }
    j["extensions"] = extension_report(d);
    ch.add("order 18p^2 period triples exist", p == 5, !no_order_18p2(p));

    j["triangle"] = triangle_report(p, &ch);

    const auto curve = curve_report(p);
    for (const auto& m : curve["members"])
        for (const auto& c : m["checks"])
            ch.add("curve t=" + m["t"].get<std::string>() + ": " + c["name"].get<std::string>(), true,
                   c["passed"].get<bool>());
    j["curve"] = curve;
    j["checks"] = ch.json();
    return r;
}

/// Escapes '|' for use inside a markdown table cell.
inline std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

/// Markdown rendering of a full report.
inline std::string report_markdown(const nlohmann::json& j) {
    std::ostringstream os;
    const int p = j["p"];
    os << "# Report for p = " << p << "\n\n";
    os << "Genus " << j["genus"] << ", |G| = " << j["group"]["order"] << ", |Aut(G)| = " << j["group"]["automorphisms"]
       << ".\n\n## Strata of " << j["strata"]["signature"].get<std::string>() << "\n\n";
    os << "| representative | vectors | labels |\n|---|---|---|\n";
    for (const auto& s : j["strata"]["classes"]) {
        std::string labels;
        for (const auto& l : s["labels"]) labels += (labels.empty() ? "" : ", ") + l.get<std::string>();
        os << "| " << md_cell(s["representative"].get<std::string>()) << " | " << s["orbit_size"] << " | " << labels << " |\n";
    }
    os << "\n## Quotient tables\n";
    for (const auto& [k, rows] : j["quotient_tables"].items()) {
        os << "\n### " << k << "\n\n| H | order of H | g_H | ramification data |\n|---|---|---|---|\n";
        for (const auto& r : rows)
            os << "| " << r["subgroup"].get<std::string>() << " | " << r["order"] << " | " << r["genus"] << " | "
               << r["ramification"].get<std::string>() << " |\n";
    }
    os << "\n## Extensions\n\n";
    for (const auto& s : j["extensions"]["supergroups"])
        os << "- " << s["group"].get<std::string>() << ": " << s["actions"] << " actions, " << s["classes"]
           << " class(es)\n";
    for (const auto& e : j["extensions"]["extensions"])
        os << "- " << e["from"].get<std::string>() << " extends to " << e["to"].get<std::string>() << "\n";
    for (const auto& c : j["extensions"]["caveats"]) os << "- caveat: " << c.get<std::string>() << "\n";
    os << "\n## (0;3,2p,2p)\n\n" << j["triangle"]["classes"] << " classes over " << j["triangle"]["vectors"]
       << " vectors.\n\n## Checks\n\n";
    for (const auto& c : j["checks"])
        os << "- [" << (c["passed"].get<bool>() ? "x" : " ") << "] " << c["name"].get<std::string>()
           << (c.contains("informational") ? " (informational)" : "") << "\n";
    return os.str();
}

}  // namespace kkp

#endif  // KKP_REPORT_HPP
