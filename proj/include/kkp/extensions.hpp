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

#ifndef KKP_EXTENSIONS_HPP
#define KKP_EXTENSIONS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kkp/actions.hpp"
#include "kkp/automorphism.hpp"
#include "kkp/signature.hpp"
#include "kkp/word.hpp"

namespace kkp {

/// A supergroup action together with words in its Fuchsian generators z1, z2, ... that generate a subgroup
/// of the stated signature. `expected_periods` follows word order.
struct RestrictionDatum {
    GeneratingVector super;
    std::vector<std::string> words;
    std::vector<int> expected_periods;
};

/// Images of the words: a generating vector of the image subgroup, still written in the supergroup.
struct Restriction {
    const Group* super = nullptr;
    SubgroupOf<Group> image;
    std::vector<GroupElement> elements;
    std::vector<int> periods;
    long long index = 0;  // [supergroup : image] = area ratio
};

inline Restriction restrict(const RestrictionDatum& d) {
    const Group& g = *d.super.group;
    if (d.words.size() != d.expected_periods.size()) throw std::invalid_argument("one period per word expected");
    std::map<std::string, GroupElement> bind;
    for (std::size_t i = 0; i < d.super.size(); ++i) bind["z" + std::to_string(i + 1)] = d.super.elements[i];
    Restriction out;
    out.super = &g;
    out.periods = d.expected_periods;
    auto prod = g.identity();
    for (std::size_t i = 0; i < d.words.size(); ++i) {
        const auto x = evaluate(parse_word(d.words[i]), bind, g);
        const int o = g.order_of(x);
        if (o != d.expected_periods[i])
            throw OrderMismatch("word \"" + d.words[i] + "\" maps to an element of order " + std::to_string(o) +
                                ", expected " + std::to_string(d.expected_periods[i]));
        out.elements.push_back(x);
        prod = g.multiply(prod, x);
    }
    if (!(prod == g.identity())) throw NonTrivialProduct("product of the restricted images is not the identity");
    out.image = subgroup_generated(g, out.elements);
    const Rational ratio = index_from_areas(Signature(0, d.expected_periods), d.super.signature());
    if (ratio.denominator() != 1 || static_cast<std::size_t>(ratio.numerator()) * out.image.size() != g.order())
        throw IndexMismatch("area ratio " + std::to_string(ratio.numerator()) + "/" +
                            std::to_string(ratio.denominator()) + " differs from the index of the image subgroup " +
                            std::to_string(g.order() / out.image.size()));
    out.index = ratio.numerator();
    return out;
}

/// Words z2^2 z1 z2, z2 z1 z2^2, z1 z2^2 z1, z3^-4: a (0;2,2,3,p) subgroup of index 4 in (0;2,3,4p).
inline RestrictionDatum fermat_restriction(const GeneratingVector& v) {
    const int p = v.group->modulus() / 2;
    return {v, {"z2^2 z1 z2", "z2 z1 z2^2", "z1 z2^2 z1", "z3^-4"}, {2, 2, 3, p}};
}

/// Words z1, z2 z1 z2^-1, z2^2, z3^2: a (0;2,2,3,p) subgroup of index 2 in (0;2,6,2p).
inline RestrictionDatum alpha_restriction(const GeneratingVector& v) {
    const int p = v.group->modulus();
    return {v, {"z1", "z2 z1 z2^-1", "z2^2", "z3^2"}, {2, 2, 3, p}};
}

/// Words z2^2, z3, z1 z3 z1^-1: a (0;3,2p,2p) subgroup of index 2 in (0;2,6,2p).
inline RestrictionDatum delta0_restriction(const GeneratingVector& v) {
    const int p = v.group->modulus();
    return {v, {"z2^2", "z3", "z1 z3 z1^-1"}, {3, 2 * p, 2 * p}};
}

/// Identifies image subgroups with Z_p^2 x| D_3 through verified isomorphisms, one per subgroup.
class PullBack {
   public:
    explicit PullBack(const Group& model) : model_(&model) {}

    /// The restriction as a vector of the model group, or nullopt when the image is not isomorphic to it.
    std::optional<GeneratingVector> operator()(const Restriction& r) {
        auto& slot = cache_[{r.super, r.image.indices}];
        if (!slot) {
            slot = std::make_unique<Entry>();
            if (auto iso = find_isomorphism(*model_, *r.super, r.image)) {
                slot->back.assign(r.super->order(), 0);
                for (std::size_t i = 0; i < iso->table.size(); ++i)
                    slot->back[iso->table[i]] = static_cast<std::uint32_t>(i);
                slot->found = true;
            }
        }
        if (!slot->found) return std::nullopt;
        std::vector<GroupElement> els;
        for (const auto& x : r.elements) els.push_back(model_->element_at(slot->back[r.super->index_of(x)]));
        return make_vector(*model_, std::move(els));
    }

   private:
    struct Entry {
        bool found = false;
        std::vector<std::uint32_t> back;
    };
    const Group* model_;
    std::map<std::pair<const Group*, std::vector<std::uint32_t>>, std::unique_ptr<Entry>> cache_;
};

/// Strata of the (0;2,6,2p) actions of the central or inverting extension.
inline Classification classify_supergroup_actions(const GroupSpec& spec) {
    if (!spec.extended()) throw SpecMismatch("expected an extension of Z_p^2 x| D_3");
    const int p = spec.modulus;
    return classify_actions(Group::get(spec), Signature(0, {2, 6, 2 * p}));
}

/// Label used in reports: the first theta_k with 1 <= k <= p-2 (else the first label).
inline std::string primary_label(const Stratum& s, int p) {
    for (const auto& l : s.labels) {
        if (l.rfind("theta_", 0) != 0) continue;
        const int k = std::stoi(l.substr(6));
        if (k >= 1 && k <= p - 2) return l;
    }
    return s.labels.empty() ? std::string("unlabelled") : s.labels.front();
}

/// Restriction outcome for every action of one supergroup.
struct SupergroupOutcome {
    std::string name;                              // "H1", "H2", "Fermat"
    std::size_t actions = 0;                       // epimorphisms enumerated
    std::size_t classes = 0;                       // strata of the supergroup actions
    std::map<std::size_t, std::size_t> landed;     // theta-stratum index -> number of restricted actions
    std::size_t not_model = 0;                     // restrictions whose image is not Z_p^2 x| D_3
};

struct ExtensionDecision {
    int p = 0;
    Classification theta;  // (0;2,2,3,p) strata, labelled
    std::vector<SupergroupOutcome> supergroups;
    /// (stratum label, supergroup name) for every stratum reached by some restriction.
    std::vector<std::pair<std::string, std::string>> extensions;
};

namespace details {

inline SupergroupOutcome restrict_all(const std::string& name, const Group& super, const Signature& sig,
                                      RestrictionDatum (*datum)(const GeneratingVector&), const Classification& theta,
                                      PullBack& pull) {
    SupergroupOutcome out;
    out.name = name;
    const auto vectors = enumerate_skes(super, sig);
    out.actions = vectors.size();
    out.classes = classify(vectors, automorphism_generators(super)).strata.size();
    for (const auto& v : vectors) {
        const auto pulled = pull(restrict(datum(v)));
        if (!pulled) {
            ++out.not_model;
            continue;
        }
        if (auto s = theta.stratum_of(*pulled)) ++out.landed[*s];
    }
    return out;
}

}  // namespace details

/// Decides which (0;2,2,3,p) strata extend to the central extension (H1), the inverting extension (H2) and
/// the Fermat group, by restricting every supergroup action and locating the result.
inline ExtensionDecision decide_extensions(int p, bool include_fermat = true) {
    ExtensionDecision d;
    d.p = p;
    const auto& g = Group::get(GroupSpec::semidirect(p));
    d.theta = classify_actions(g, Signature(0, {2, 2, 3, p}));
    label_theta_strata(d.theta);
    PullBack pull(g);
    const Signature tri(0, {2, 6, 2 * p});
    d.supergroups.push_back(
        details::restrict_all("H1", Group::get(GroupSpec::central(p)), tri, alpha_restriction, d.theta, pull));
    d.supergroups.push_back(
        details::restrict_all("H2", Group::get(GroupSpec::inverting(p)), tri, alpha_restriction, d.theta, pull));
    if (include_fermat)
        d.supergroups.push_back(details::restrict_all("Fermat", Group::get(GroupSpec::fermat(p)),
                                                      Signature(0, {2, 3, 4 * p}), fermat_restriction, d.theta,
                                                      pull));
    for (const auto& sg : d.supergroups)
        for (const auto& [idx, count] : sg.landed) d.extensions.emplace_back(primary_label(d.theta.strata[idx], p), sg.name);
    return d;
}

/// Period triples m1 <= m2 <= m3 with 1/m1 + 1/m2 + 1/m3 = (7p+3)/(9p), the signature condition for a group of
/// order 18p^2 acting on a surface of genus (p-1)(2p-1) with triangle quotient.
inline std::vector<std::array<long long, 3>> order_18p2_solutions(int p) {
    const Rational target(7LL * p + 3, 9LL * p);
    std::vector<std::array<long long, 3>> out;
    for (long long m1 = 2; Rational(3, m1) >= target; ++m1) {
        const Rational rest = target - Rational(1, m1);
        if (rest <= 0) continue;
        for (long long m2 = m1; Rational(2, m2) >= rest; ++m2) {
            const Rational last = rest - Rational(1, m2);
            if (last <= 0 || last.numerator() != 1) continue;
            const long long m3 = last.denominator();
            if (m3 >= m2) out.push_back({m1, m2, m3});
        }
    }
    return out;
}

/// True iff the search finds no period triple (no action of order 18p^2 with triangle quotient).
inline bool no_order_18p2(int p) { return order_18p2_solutions(p).empty(); }

struct BoundsReport {
    int p = 0;
    long long genus = 0;
    long long hurwitz = 0;      // 84(g-1)
    long long plane_curve = 0;  // 6 d^2 with d = 2p
    struct Step {
        int lambda = 0;
        long long order = 0;  // 6 p^2 lambda
        std::string status;
    };
    std::vector<Step> ladder;
};

inline BoundsReport bounds_report(int p, std::optional<bool> extensions_realized = std::nullopt) {
    BoundsReport b;
    b.p = p;
    b.genus = static_cast<long long>(p - 1) * (2 * p - 1);
    b.hurwitz = 84 * (b.genus - 1);
    b.plane_curve = 6LL * (2 * p) * (2 * p);
    const long long base = 6LL * p * p;
    b.ladder.push_back({1, base, "realized (generic member)"});
    b.ladder.push_back({2, 2 * base,
                        !extensions_realized ? "not computed"
                        : *extensions_realized ? "realized (central and inverting extensions)"
                                               : "not realized"});
    const auto sols = order_18p2_solutions(p);
    b.ladder.push_back({3, 3 * base,
                        sols.empty() ? "excluded (no period triple)"
                                     : "period triples exist; exclusion rests on an external genus-" +
                                           std::to_string(b.genus) + " census"});
    b.ladder.push_back({4, 4 * base, "realized (Fermat curve, equals the plane-curve bound)"});
    return b;
}

inline nlohmann::json to_json(const BoundsReport& b) {
    auto ladder = nlohmann::json::array();
    for (const auto& s : b.ladder) ladder.push_back({{"lambda", s.lambda}, {"order", s.order}, {"status", s.status}});
    return {{"p", b.p}, {"genus", b.genus}, {"hurwitz_bound", b.hurwitz}, {"plane_curve_bound", b.plane_curve},
            {"ladder", ladder}};
}

inline nlohmann::json extension_report(const ExtensionDecision& d) {
    nlohmann::json j;
    j["p"] = d.p;
    auto strata = nlohmann::json::array();
    for (const auto& s : d.theta.strata)
        strata.push_back({{"label", primary_label(s, d.p)},
                          {"members", s.labels},
                          {"representative", to_string(s.representative)},
                          {"orbit_size", s.orbit_size}});
    j["strata"] = strata;
    auto ext = nlohmann::json::array();
    for (const auto& [from, to] : d.extensions) ext.push_back({{"from", from}, {"to", to}});
    j["extensions"] = ext;
    auto sup = nlohmann::json::array();
    for (const auto& sg : d.supergroups)
        sup.push_back({{"group", sg.name}, {"actions", sg.actions}, {"classes", sg.classes}, {"not_model", sg.not_model}});
    j["supergroups"] = sup;
    auto caveats = nlohmann::json::array();
    const auto sols = order_18p2_solutions(d.p);
    nlohmann::json triples = nlohmann::json::array();
    for (const auto& t : sols) triples.push_back(t);
    j["order_18p2_solutions"] = triples;
    if (!sols.empty())
        caveats.push_back("period triples exist for order 18p^2; ruling them out needs an external census of genus " +
                          std::to_string((d.p - 1) * (2 * d.p - 1)) + " surfaces, not recomputed");
    if (d.p == 11) caveats.push_back("p = 11 lies beyond the reference uniqueness range; results reported as found");
    j["caveats"] = caveats;
    j["bounds"] = to_json(bounds_report(d.p, !d.extensions.empty()));
    return j;
}

}  // namespace kkp

#endif  // KKP_EXTENSIONS_HPP
