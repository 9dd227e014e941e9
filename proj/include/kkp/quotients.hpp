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

#ifndef KKP_QUOTIENTS_HPP
#define KKP_QUOTIENTS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kkp/actions.hpp"

namespace kkp {

/// Genus of X/H and the cone orders of the covering X -> X/H.
struct InducedSignature {
    long long genus = 0;
    std::vector<int> cone_orders;  // ascending; empty when unramified
    /// Orbit lengths of the coset permutation of each g_j, in tuple order.
    std::vector<std::vector<int>> orbit_lengths;

    Signature signature() const { return Signature(static_cast<int>(genus), cone_orders); }
};

/// For each j, the orbits of Hx -> Hx g_j on right cosets. An orbit of length l is a point of X/H over the
/// j-th branch value with cone order m_j / l; Riemann-Hurwitz for X/H -> X/G gives the genus.
template <FiniteGroup G>
InducedSignature induced_signature(const BasicGeneratingVector<G>& v, const SubgroupOf<G>& h) {
    const G& group = *v.group;
    if (h.mask.size() != group.order() || h.indices.empty())
        throw SubgroupNotContained("subgroup does not belong to the vector's group");
    std::size_t n = 0;
    const auto label = right_coset_labels(group, h, &n);
    std::vector<typename G::element_type> reps(n);
    std::vector<bool> have(n, false);
    for (std::size_t i = 0; i < group.order(); ++i)
        if (!have[label[i]]) {
            have[label[i]] = true;
            reps[label[i]] = group.element_at(i);
        }
    InducedSignature out;
    long long ramification = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        std::vector<std::uint32_t> perm(n);
        for (std::size_t c = 0; c < n; ++c) perm[c] = label[group.index_of(group.multiply(reps[c], v.elements[j]))];
        std::vector<bool> seen(n, false);
        std::vector<int> lengths;
        for (std::size_t c = 0; c < n; ++c) {
            if (seen[c]) continue;
            int len = 0;
            for (auto x = c; !seen[x]; x = perm[x]) {
                seen[x] = true;
                ++len;
            }
            lengths.push_back(len);
            ramification += len - 1;
            if (v.periods[j] / len > 1) out.cone_orders.push_back(v.periods[j] / len);
        }
        out.orbit_lengths.push_back(std::move(lengths));
    }
    const long long twice = 2 - 2 * static_cast<long long>(n) + ramification;
    if (twice % 2) throw NonIntegralGenus("coset count gives a non-integral quotient genus");
    out.genus = twice / 2;
    std::sort(out.cone_orders.begin(), out.cone_orders.end());
    return out;
}

/// Checks 2g_X - 2 = |H| (2g_H - 2 + sum(1 - 1/c)) against the genus of X from the full action.
template <FiniteGroup G>
bool double_accounting_holds(const BasicGeneratingVector<G>& v, const SubgroupOf<G>& h, const InducedSignature& q) {
    const long long gx = rh_genus(static_cast<long long>(v.group->order()), v.signature());
    Rational rhs(2 * q.genus - 2);
    for (int c : q.cone_orders) rhs += Rational(c - 1, c);
    rhs *= static_cast<long long>(h.size());
    return rhs == Rational(2 * gx - 2);
}

/// A point of X lying over the j-th branch value, named by its left coset t<g_j> (least element index).
struct BranchPoint {
    std::size_t branch = 0;
    std::uint32_t coset = 0;
    auto operator<=>(const BranchPoint&) const = default;
};

namespace details {

template <FiniteGroup G>
std::vector<bool> cyclic_mask(const G& group, const typename G::element_type& g) {
    std::vector<bool> mask(group.order(), false);
    auto x = group.identity();
    do {
        mask[group.index_of(x)] = true;
        x = group.multiply(x, g);
    } while (!(x == group.identity()));
    return mask;
}

}  // namespace details

/// Points of X fixed by g: the cosets t<g_j> with t^-1 g t in <g_j>.
template <FiniteGroup G>
std::vector<BranchPoint> fixed_point_set(const BasicGeneratingVector<G>& v, const typename G::element_type& g) {
    const G& group = *v.group;
    if (g == group.identity()) throw IdentityElement("the identity fixes every point");
    std::vector<BranchPoint> out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const auto cyc = details::cyclic_mask(group, v.elements[j]);
        std::set<std::uint32_t> cosets;
        for (std::size_t ti = 0; ti < group.order(); ++ti) {
            const auto t = group.element_at(ti);
            if (!cyc[group.index_of(group.multiply(group.multiply(group.inverse(t), g), t))]) continue;
            std::uint32_t least = static_cast<std::uint32_t>(ti);
            auto y = t;
            for (int e = 0; e < v.periods[j]; ++e) {
                least = std::min(least, static_cast<std::uint32_t>(group.index_of(y)));
                y = group.multiply(y, v.elements[j]);
            }
            cosets.insert(least);
        }
        for (auto c : cosets) out.push_back({j, c});
    }
    return out;
}

template <FiniteGroup G>
std::size_t fixed_points(const BasicGeneratingVector<G>& v, const typename G::element_type& g) {
    return fixed_point_set(v, g).size();
}

/// Distinct points fixed by some nontrivial element of H, with the order of each point's stabilizer in H.
template <FiniteGroup G>
std::map<BranchPoint, std::size_t> points_with_nontrivial_stabilizer(const BasicGeneratingVector<G>& v,
                                                                    const SubgroupOf<G>& h) {
    const G& group = *v.group;
    std::map<BranchPoint, std::size_t> out;
    for (auto i : h.indices) {
        const auto g = group.element_at(i);
        if (g == group.identity()) continue;
        for (const auto& pt : fixed_point_set(v, g)) ++out[pt];
    }
    for (auto& [pt, count] : out) ++count;  // the identity
    return out;
}

/// A cyclic subgroup whose quotient has genus 0, if one exists.
template <FiniteGroup G>
std::optional<SubgroupOf<G>> cyclic_gonality_witness(const BasicGeneratingVector<G>& v) {
    const G& group = *v.group;
    std::set<std::vector<bool>> done;
    for (std::size_t i = 0; i < group.order(); ++i) {
        const auto g = group.element_at(i);
        if (g == group.identity()) continue;
        auto mask = details::cyclic_mask(group, g);
        if (!done.insert(mask).second) continue;
        auto h = details::from_mask<G>(std::move(mask));
        if (induced_signature(v, h).genus == 0) return h;
    }
    return std::nullopt;
}

template <FiniteGroup G>
bool is_cyclic_n_gonal(const BasicGeneratingVector<G>& v) {
    return cyclic_gonality_witness(v).has_value();
}

/// One row of the quotient table of theta_k.
struct QuotientRow {
    std::string subgroup;                 // e.g. "<a b^2>", "<a,b> x| <r>"
    std::vector<std::string> generators;  // words
    std::size_t order = 0;
    long long genus = 0;
    std::vector<int> cone_orders;
    bool double_accounting = false;
};

/// Ramification data as "(2,2,5,5,5,5,5)", or "(-)" when unramified.
inline std::string ramification_text(const std::vector<int>& cones) {
    if (cones.empty()) return "(-)";
    std::string s = "(";
    for (std::size_t i = 0; i < cones.size(); ++i) s += (i ? "," : "") + std::to_string(cones[i]);
    return s + ")";
}

/// Quotients of the theta_k action by <a b^l> (every l), <s>, <b,s>, <a,b>, <r>, <s,r>, <as>, <a,b,r>, <a,b,s>.
inline std::vector<QuotientRow> subgroup_quotient_table(int p, int k) {
    const auto& g = Group::get(GroupSpec::semidirect(p));
    if (k < 1 || k > p - 2) throw InvalidIndex("table needs 1 <= k <= p-2");
    const auto v = theta_k(g, k);
    std::vector<std::pair<std::string, std::vector<std::string>>> rows;
    for (int l = 0; l < p; ++l) {
        const std::string w = l == 0 ? "a" : l == 1 ? "a b" : "a b^" + std::to_string(l);
        rows.push_back({"<" + w + ">", {w}});
    }
    rows.push_back({"<s>", {"s"}});
    rows.push_back({"<b,s>", {"b", "s"}});
    rows.push_back({"<a,b>", {"a", "b"}});
    rows.push_back({"<r>", {"r"}});
    rows.push_back({"<s,r>", {"s", "r"}});
    rows.push_back({"<as>", {"a s"}});
    rows.push_back({"<a,b> x| <r>", {"a", "b", "r"}});
    rows.push_back({"<a,b> x| <s>", {"a", "b", "s"}});
    std::vector<QuotientRow> out;
    for (const auto& [name, words] : rows) {
        std::vector<GroupElement> gens;
        for (const auto& w : words) gens.push_back(g.eval(w));
        const auto h = subgroup_generated(g, gens);
        const auto q = induced_signature(v, h);
        out.push_back({name, words, h.size(), q.genus, q.cone_orders, double_accounting_holds(v, h, q)});
    }
    return out;
}

inline std::string table_markdown(const std::vector<QuotientRow>& rows) {
    std::ostringstream os;
    os << "| H | order of H | g_H | ramification data |\n|---|---|---|---|\n";
    for (const auto& r : rows)
        os << "| " << r.subgroup << " | " << r.order << " | " << r.genus << " | " << ramification_text(r.cone_orders)
           << " |\n";
    return os.str();
}

inline std::string table_csv(const std::vector<QuotientRow>& rows) {
    std::ostringstream os;
    os << "subgroup,order,genus,ramification\n";
    for (const auto& r : rows)
        os << '"' << r.subgroup << "\"," << r.order << ',' << r.genus << ",\"" << ramification_text(r.cone_orders)
           << "\"\n";
    return os.str();
}

inline nlohmann::json table_json(const std::vector<QuotientRow>& rows) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows)
        arr.push_back({{"subgroup", r.subgroup},
                       {"generators", r.generators},
                       {"order", r.order},
                       {"genus", r.genus},
                       {"cone_orders", r.cone_orders},
                       {"ramification", ramification_text(r.cone_orders)},
                       {"double_accounting", r.double_accounting}});
    return arr;
}

}  // namespace kkp

#endif  // KKP_QUOTIENTS_HPP
